#include "fnet/printer.hpp"

#include <sstream>

#include "fnet/condition.hpp"

namespace fnet {
namespace {

class Printer {
  public:
    std::string run(const Model& model) {
        if (model.elements.empty()) return "\n";
        for (const auto& el : model.elements)
            std::visit([this](const auto& e) { print(e); }, el);
        return out_.str();
    }

  private:
    std::ostringstream out_;
    int indent_ = 0;

    std::ostream& line() {
        for (int i = 0; i < indent_; ++i) out_ << "  ";
        return out_;
    }

    static std::string signals_of(const Connector& c) {
        std::string s;
        for (const auto& sig : c.signals) {
            if (!s.empty()) s += ", ";
            s += sig;
        }
        if (!s.empty()) s += " ";
        return s;
    }

    static const char* link_keyword(LinkKind k) {
        switch (k) {
            case LinkKind::Signal: return "connect";
            case LinkKind::Mech: return "mech";
            case LinkKind::Hydr: return "hydr";
            case LinkKind::Elec: return "elec";
        }
        return "connect";
    }

    void print_connector(const Connector& c) {
        line() << link_keyword(c.kind) << " " << signals_of(c) << ": "
               << path_to_string(c.source) << " -> " << path_to_string(c.target) << "\n";
    }

    void print_block_item(const BlockItem& item) {
        switch (item.kind) {
            case BlockItemKind::Instance:
                line() << "instance " << item.name << " : " << item.def_name << "\n";
                return;
            case BlockItemKind::Block:
                line() << "block " << item.name;
                break;
            case BlockItemKind::BlockDef:
                line() << "blockdef " << item.name;
                break;
        }
        if (item.children.empty()) {
            out_ << " { }\n";
            return;
        }
        out_ << " {\n";
        ++indent_;
        for (const auto& child : item.children) print_block_item(child);
        --indent_;
        line() << "}\n";
    }

    void print(const FunctionNet& net) {
        line() << "net " << net.name << " {\n";
        ++indent_;
        for (const auto& item : net.items) print_block_item(item);
        for (const auto& c : net.connectors) print_connector(c);
        --indent_;
        line() << "}\n";
    }

    void print_view_block(const ViewBlock& vb) {
        const char* kw = vb.marker == Marker::Plain ? "block"
                         : vb.marker == Marker::Ext ? "ext"
                                                    : "env";
        line() << kw << " " << vb.name;
        if (vb.children.empty()) {
            out_ << "\n";
            return;
        }
        out_ << " {\n";
        ++indent_;
        for (const auto& child : vb.children) print_view_block(child);
        --indent_;
        line() << "}\n";
    }

    void print(const View& view) {
        line() << "view " << view.name << " ";
        switch (view.kind) {
            case ViewKind::Feature: out_ << "feature"; break;
            case ViewKind::Variant: out_ << "variant of " << view.variant_of; break;
            case ViewKind::Mode: out_ << "mode"; break;
            case ViewKind::ScenarioBase: out_ << "scenariobase"; break;
        }
        out_ << " on " << view.base << " {\n";
        ++indent_;
        for (const auto& vb : view.blocks) print_view_block(vb);
        for (const auto& c : view.connectors) print_connector(c);
        --indent_;
        line() << "}\n";
    }

    void print(const Scenario& sc) {
        const char* policy = sc.policy == Policy::Complete ? "complete"
                             : sc.policy == Policy::Visible ? "visible"
                                                            : "free";
        line() << "scenario " << sc.name << " on " << sc.base_view << " policy " << policy
               << " {\n";
        ++indent_;
        for (const auto& ia : sc.interactions) {
            line() << ia.seq << " " << (ia.trigger ? "trigger " : "")
                   << path_to_string(ia.source) << " -> " << path_to_string(ia.target)
                   << " : " << ia.signal << " " << condition_to_string(ia.condition) << "\n";
        }
        --indent_;
        line() << "}\n";
    }

    void print(const ModeMachine& mm) {
        line() << "modes " << mm.name << " on " << mm.base << " {\n";
        ++indent_;
        for (const auto& st : mm.states)
            line() << "state " << st.mode << " view " << st.view << "\n";
        for (const auto& tr : mm.transitions)
            line() << "from " << tr.from << " to " << tr.to << " when " << tr.signal << " "
                   << condition_to_string(tr.condition) << "\n";
        line() << "initial " << mm.initial << "\n";
        --indent_;
        line() << "}\n";
    }

    void print(const VariantSet& vs) {
        line() << "variants " << vs.name << " of " << vs.feature_view << " {\n";
        ++indent_;
        for (const auto& v : vs.variants)
            line() << "variant " << v.name << " view " << v.view << "\n";
        --indent_;
        line() << "}\n";
    }

    void print(const StubSet& ss) {
        line() << "stubs " << ss.name << " on " << ss.base << " {\n";
        ++indent_;
        for (const auto& r : ss.rules) {
            line() << "rule " << path_to_string(r.owner) << " when " << r.guard_signal << " "
                   << condition_to_string(r.guard) << " emit ";
            bool first = true;
            for (const auto& [sig, val] : r.emissions) {
                if (!first) out_ << ", ";
                first = false;
                out_ << sig << " = " << val.to_string();
            }
            out_ << "\n";
        }
        --indent_;
        line() << "}\n";
    }
};

}  // namespace

std::string render_model(const Model& model) { return Printer().run(model); }

}  // namespace fnet

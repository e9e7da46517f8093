#include "fnet/model.hpp"

#include <unordered_map>

namespace fnet {

std::string path_to_string(const PathRef& p) {
    std::string out;
    for (const auto& seg : p) {
        if (!out.empty()) out += '.';
        out += seg;
    }
    return out;
}

namespace {

template <class T>
const T* find_by_name(const std::vector<Element>& elements, const std::string& name) {
    for (const auto& el : elements) {
        if (const T* t = std::get_if<T>(&el); t && t->name == name) return t;
    }
    return nullptr;
}

const std::string& element_name(const Element& el) {
    return std::visit([](const auto& e) -> const std::string& { return e.name; }, el);
}

const SourceSpan& element_span(const Element& el) {
    return std::visit([](const auto& e) -> const SourceSpan& { return e.span; }, el);
}

}  // namespace

const FunctionNet* Model::find_net(const std::string& name) const {
    return find_by_name<FunctionNet>(elements, name);
}
const View* Model::find_view(const std::string& name) const {
    return find_by_name<View>(elements, name);
}
const Scenario* Model::find_scenario(const std::string& name) const {
    return find_by_name<Scenario>(elements, name);
}
const ModeMachine* Model::find_modes(const std::string& name) const {
    return find_by_name<ModeMachine>(elements, name);
}
const VariantSet* Model::find_variants(const std::string& name) const {
    return find_by_name<VariantSet>(elements, name);
}

std::vector<const StubSet*> Model::stubs_for(const std::string& net_name) const {
    std::vector<const StubSet*> out;
    for (const auto& el : elements) {
        if (const StubSet* s = std::get_if<StubSet>(&el); s && s->base == net_name)
            out.push_back(s);
    }
    return out;
}

void Model::merge(Model other) {
    for (auto& el : other.elements) elements.push_back(std::move(el));
}

std::vector<ParseError> verify_references(const Model& model) {
    std::vector<ParseError> errors;
    auto error = [&](const SourceSpan& span, const std::string& msg) {
        errors.push_back(ParseError{span, msg, {}});
    };

    std::unordered_map<std::string, int> names;
    for (const auto& el : model.elements) {
        if (++names[element_name(el)] == 2)
            error(element_span(el), "DUPLICATE_NAME: '" + element_name(el) +
                                        "' declared more than once");
    }

    for (const auto& el : model.elements) {
        if (const View* v = std::get_if<View>(&el)) {
            if (!model.find_net(v->base))
                error(v->span, "UNKNOWN_BASE: view '" + v->name + "' references net '" +
                                   v->base + "'");
            if (v->kind == ViewKind::Variant && !model.find_view(v->variant_of))
                error(v->span, "UNKNOWN_BASE: variant view '" + v->name +
                                   "' specializes unknown view '" + v->variant_of + "'");
        } else if (const Scenario* s = std::get_if<Scenario>(&el)) {
            if (!model.find_view(s->base_view))
                error(s->span, "UNKNOWN_BASE: scenario '" + s->name +
                                   "' references view '" + s->base_view + "'");
        } else if (const ModeMachine* m = std::get_if<ModeMachine>(&el)) {
            if (!model.find_net(m->base))
                error(m->span, "UNKNOWN_BASE: modes '" + m->name + "' reference net '" +
                                   m->base + "'");
            for (const auto& st : m->states)
                if (!model.find_view(st.view))
                    error(st.span, "UNKNOWN_BASE: mode '" + st.mode +
                                       "' references unknown view '" + st.view + "'");
        } else if (const VariantSet* vs = std::get_if<VariantSet>(&el)) {
            if (!model.find_view(vs->feature_view))
                error(vs->span, "UNKNOWN_BASE: variants '" + vs->name +
                                    "' reference unknown view '" + vs->feature_view + "'");
            for (const auto& v : vs->variants)
                if (!model.find_view(v.view))
                    error(v.span, "UNKNOWN_BASE: variant '" + v.name +
                                      "' references unknown view '" + v.view + "'");
        } else if (const StubSet* ss = std::get_if<StubSet>(&el)) {
            if (!model.find_net(ss->base))
                error(ss->span, "UNKNOWN_BASE: stubs '" + ss->name + "' reference net '" +
                                    ss->base + "'");
        }
    }
    return errors;
}

}  // namespace fnet

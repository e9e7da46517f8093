#include "fnet/parser.hpp"

#include <cctype>
#include <cstdlib>
#include <set>
#include <string>
#include <vector>

namespace fnet {
namespace {

enum class Tok {
    Id, Number, LBrace, RBrace, Colon, Comma, Arrow, Pipe, Dot,
    Gt, Shr, EqEq, Eq, Lt, Shl, Bad, End
};

struct Token {
    Tok kind = Tok::End;
    std::string text;   // Id: name; Number: lexeme without unit
    std::string unit;   // Number only
    double number = 0;
    SourceSpan span;
};

const std::set<std::string>& keywords() {
    static const std::set<std::string> kw = {
        "net", "view", "env", "ext", "scenario", "trigger", "policy",
        "mode", "modes", "variant", "variants", "block", "blockdef",
        "instance", "connect", "mech", "hydr", "elec", "feature",
        "scenariobase", "on", "of", "state", "from", "to", "when",
        "initial", "complete", "visible", "free", "invalid",
        "stubs", "rule", "emit",
    };
    return kw;
}

bool is_id_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_id_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_unit_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '%' || c == '/';
}

class Lexer {
  public:
    Lexer(const std::string& text, const std::string& file) : text_(text), file_(file) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_ws();
            Token t = next();
            bool end = t.kind == Tok::End;
            out.push_back(std::move(t));
            if (end) break;
        }
        return out;
    }

  private:
    void skip_ws() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '\n') { ++line_; col_ = 1; ++pos_; }
            else if (std::isspace(static_cast<unsigned char>(c))) { ++col_; ++pos_; }
            else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
                while (pos_ < text_.size() && text_[pos_] != '\n') { ++pos_; ++col_; }
            } else break;
        }
    }

    SourceSpan here(int length) const { return {file_, line_, col_, length}; }

    Token next() {
        if (pos_ >= text_.size()) return {Tok::End, "", "", 0, here(0)};
        char c = text_[pos_];
        if (is_id_start(c)) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && is_id_char(text_[pos_])) ++pos_;
            std::string name = text_.substr(start, pos_ - start);
            Token t{Tok::Id, name, "", 0, here(static_cast<int>(name.size()))};
            col_ += static_cast<int>(name.size());
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '-' && pos_ + 1 < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
            std::size_t start = pos_;
            if (c == '-') ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ + 1 < text_.size() && text_[pos_] == '.' &&
                std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
                ++pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            }
            std::string lexeme = text_.substr(start, pos_ - start);
            std::string unit;
            if (pos_ < text_.size() && is_id_start(text_[pos_])) {
                std::size_t ustart = pos_;
                while (pos_ < text_.size() && is_unit_char(text_[pos_])) {
                    if (text_[pos_] == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/')
                        break;  // comment, not part of the unit
                    ++pos_;
                }
                unit = text_.substr(ustart, pos_ - ustart);
            }
            Token t{Tok::Number, lexeme, unit, std::strtod(lexeme.c_str(), nullptr),
                    here(static_cast<int>(pos_ - start))};
            col_ += static_cast<int>(pos_ - start);
            return t;
        }
        auto sym = [&](Tok k, int n, const char* text) {
            Token t{k, text, "", 0, here(n)};
            pos_ += n;
            col_ += n;
            return t;
        };
        char c1 = pos_ + 1 < text_.size() ? text_[pos_ + 1] : '\0';
        switch (c) {
            case '{': return sym(Tok::LBrace, 1, "{");
            case '}': return sym(Tok::RBrace, 1, "}");
            case ',': return sym(Tok::Comma, 1, ",");
            case '|': return sym(Tok::Pipe, 1, "|");
            case ':': return sym(Tok::Colon, 1, ":");
            case '.': return sym(Tok::Dot, 1, ".");
            case '-':
                if (c1 == '>') return sym(Tok::Arrow, 2, "->");
                break;
            case '>':
                if (c1 == '>') return sym(Tok::Shr, 2, ">>");
                return sym(Tok::Gt, 1, ">");
            case '<':
                if (c1 == '<') return sym(Tok::Shl, 2, "<<");
                return sym(Tok::Lt, 1, "<");
            case '=':
                if (c1 == '=') return sym(Tok::EqEq, 2, "==");
                return sym(Tok::Eq, 1, "=");
            default: break;
        }
        Token t{Tok::Bad, std::string(1, c), "", 0, here(1)};
        pos_ += 1;
        col_ += 1;
        return t;
    }

  private:
    const std::string& text_;
    std::string file_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

struct LocalError {
    ParseError error;
};

class Parser {
  public:
    Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    ParseResult run() {
        ParseResult result;
        while (!at(Tok::End)) {
            std::size_t before = pos_;
            try {
                parse_element(result.model);
            } catch (const LocalError& e) {
                result.errors.push_back(e.error);
                recover(before);
            }
        }
        return result;
    }

    Condition parse_condition_only() {
        Condition c = parse_cond();
        if (!at(Tok::End))
            fail("expected end of condition, found '" + cur().text + "'", {"end"});
        return c;
    }

  private:
    const Token& cur() const { return toks_[pos_]; }
    const Token& peek(int n = 1) const {
        std::size_t i = pos_ + n;
        return i < toks_.size() ? toks_[i] : toks_.back();
    }
    bool at(Tok k) const { return cur().kind == k; }
    bool at_kw(const char* kw) const { return at(Tok::Id) && cur().text == kw; }

    [[noreturn]] void fail(const std::string& msg, std::vector<std::string> expected = {}) {
        throw LocalError{ParseError{cur().span, msg, std::move(expected)}};
    }

    Token take() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }

    Token expect(Tok k, const char* what) {
        if (!at(k)) fail(std::string("expected ") + what + ", found '" + cur().text + "'", {what});
        return take();
    }

    Token expect_kw(const char* kw) {
        if (!at_kw(kw)) fail(std::string("expected '") + kw + "', found '" + cur().text + "'", {kw});
        return take();
    }

    std::string expect_identifier() {
        if (!at(Tok::Id)) fail("expected identifier, found '" + cur().text + "'", {"identifier"});
        if (keywords().count(cur().text))
            fail("reserved word '" + cur().text + "' cannot be used as an identifier");
        return take().text;
    }

    /// After an element failed: skip to the end of its brace block (or the
    /// next top-level element keyword) so later elements still parse.
    void recover(std::size_t before) {
        if (pos_ == before && !at(Tok::End)) ++pos_;
        int depth = 0;
        static const std::set<std::string> top = {"net", "view", "scenario",
                                                  "modes", "variants", "stubs"};
        while (!at(Tok::End)) {
            if (at(Tok::LBrace)) ++depth;
            if (at(Tok::RBrace)) {
                ++pos_;
                if (--depth <= 0) return;
                continue;
            }
            if (depth == 0 && at(Tok::Id) && top.count(cur().text)) return;
            ++pos_;
        }
    }

    PathRef parse_path() {
        PathRef path;
        path.push_back(expect_identifier());
        while (at(Tok::Dot)) {
            take();
            path.push_back(expect_identifier());
        }
        return path;
    }

    Value parse_value() {
        if (at(Tok::Number)) {
            Token t = take();
            return Value::num(t.number, t.unit);
        }
        if (at_kw("invalid")) {
            take();
            return Value::invalid();
        }
        if (at(Tok::Id)) {
            if (keywords().count(cur().text))
                fail("reserved word '" + cur().text + "' cannot be used as a value");
            return Value::sym(take().text);
        }
        fail("expected a value, found '" + cur().text + "'", {"number", "symbol", "invalid"});
    }

    Value parse_numeric_value() {
        if (!at(Tok::Number))
            fail("relational operators require a numeric value, found '" + cur().text + "'",
                 {"number"});
        Token t = take();
        return Value::num(t.number, t.unit);
    }

    ConditionAtom parse_atom() {
        ConditionAtom atom;
        atom.span = cur().span;
        switch (cur().kind) {
            case Tok::Gt: take(); atom.kind = ConditionAtom::Kind::Cmp; atom.op = CmpOp::Greater; atom.value = parse_numeric_value(); break;
            case Tok::Shr: take(); atom.kind = ConditionAtom::Kind::Cmp; atom.op = CmpOp::BecomesGreater; atom.value = parse_numeric_value(); break;
            case Tok::Lt: take(); atom.kind = ConditionAtom::Kind::Cmp; atom.op = CmpOp::Less; atom.value = parse_numeric_value(); break;
            case Tok::Shl: take(); atom.kind = ConditionAtom::Kind::Cmp; atom.op = CmpOp::BecomesLess; atom.value = parse_numeric_value(); break;
            case Tok::EqEq: take(); atom.kind = ConditionAtom::Kind::Cmp; atom.op = CmpOp::Equals; atom.value = parse_value(); break;
            case Tok::Eq: take(); atom.kind = ConditionAtom::Kind::Cmp; atom.op = CmpOp::BecomesEqual; atom.value = parse_value(); break;
            case Tok::Colon:
                take();
                atom.kind = ConditionAtom::Kind::Transition;
                atom.from = parse_value();
                expect(Tok::Arrow, "'->'");
                atom.to = parse_value();
                break;
            default:
                if (at_kw("invalid")) { take(); atom.kind = ConditionAtom::Kind::IsInvalid; break; }
                fail("expected a condition, found '" + cur().text + "'",
                     {">", ">>", "==", "=", "<", "<<", ":", "invalid"});
        }
        return atom;
    }

    Condition parse_cond() {
        Condition cond;
        cond.atoms.push_back(parse_atom());
        while (at(Tok::Pipe)) {
            take();
            cond.atoms.push_back(parse_atom());
        }
        // chained comparisons such as "> 1 > 2" are rejected because the next
        // token is neither '|' nor a valid continuation for the caller.
        return cond;
    }

    // ---- net ----

    BlockItem parse_block_item() {
        BlockItem item;
        item.span = cur().span;
        if (at_kw("block") || at_kw("blockdef")) {
            item.kind = at_kw("block") ? BlockItemKind::Block : BlockItemKind::BlockDef;
            take();
            item.name = expect_identifier();
            expect(Tok::LBrace, "'{'");
            while (!at(Tok::RBrace) && !at(Tok::End)) item.children.push_back(parse_block_item());
            expect(Tok::RBrace, "'}'");
            return item;
        }
        if (at_kw("instance")) {
            take();
            item.kind = BlockItemKind::Instance;
            item.name = expect_identifier();
            expect(Tok::Colon, "':'");
            item.def_name = expect_identifier();
            return item;
        }
        fail("expected 'block', 'blockdef' or 'instance', found '" + cur().text + "'",
             {"block", "blockdef", "instance"});
    }

    Connector parse_connect(LinkKind kind) {
        Connector conn;
        conn.kind = kind;
        conn.span = cur().span;
        take();  // keyword
        if (!at(Tok::Colon)) {
            conn.signals.push_back(expect_identifier());
            while (at(Tok::Comma)) {
                take();
                conn.signals.push_back(expect_identifier());
            }
        }
        expect(Tok::Colon, "':'");
        conn.source = parse_path();
        expect(Tok::Arrow, "'->'");
        conn.target = parse_path();
        return conn;
    }

    FunctionNet parse_net() {
        FunctionNet net;
        net.span = cur().span;
        expect_kw("net");
        net.name = expect_identifier();
        expect(Tok::LBrace, "'{'");
        while (!at(Tok::RBrace) && !at(Tok::End)) {
            if (at_kw("connect"))
                net.connectors.push_back(parse_connect(LinkKind::Signal));
            else
                net.items.push_back(parse_block_item());
        }
        expect(Tok::RBrace, "'}'");
        return net;
    }

    // ---- view ----

    ViewBlock parse_view_block() {
        ViewBlock vb;
        vb.span = cur().span;
        if (at_kw("block")) vb.marker = Marker::Plain;
        else if (at_kw("ext")) vb.marker = Marker::Ext;
        else if (at_kw("env")) vb.marker = Marker::Env;
        else fail("expected 'block', 'ext' or 'env', found '" + cur().text + "'",
                  {"block", "ext", "env"});
        take();
        vb.name = expect_identifier();
        if (at(Tok::LBrace)) {
            take();
            while (!at(Tok::RBrace) && !at(Tok::End)) vb.children.push_back(parse_view_block());
            expect(Tok::RBrace, "'}'");
        }
        return vb;
    }

    View parse_view() {
        View view;
        view.span = cur().span;
        expect_kw("view");
        view.name = expect_identifier();
        if (at_kw("feature")) { take(); view.kind = ViewKind::Feature; }
        else if (at_kw("mode")) { take(); view.kind = ViewKind::Mode; }
        else if (at_kw("scenariobase")) { take(); view.kind = ViewKind::ScenarioBase; }
        else if (at_kw("variant")) {
            take();
            view.kind = ViewKind::Variant;
            expect_kw("of");
            view.variant_of = expect_identifier();
        }
        expect_kw("on");
        view.base = expect_identifier();
        expect(Tok::LBrace, "'{'");
        while (!at(Tok::RBrace) && !at(Tok::End)) {
            if (at_kw("connect")) view.connectors.push_back(parse_connect(LinkKind::Signal));
            else if (at_kw("mech")) view.connectors.push_back(parse_connect(LinkKind::Mech));
            else if (at_kw("hydr")) view.connectors.push_back(parse_connect(LinkKind::Hydr));
            else if (at_kw("elec")) view.connectors.push_back(parse_connect(LinkKind::Elec));
            else view.blocks.push_back(parse_view_block());
        }
        expect(Tok::RBrace, "'}'");
        return view;
    }

    // ---- scenario ----

    Scenario parse_scenario() {
        Scenario sc;
        sc.span = cur().span;
        expect_kw("scenario");
        sc.name = expect_identifier();
        expect_kw("on");
        sc.base_view = expect_identifier();
        expect_kw("policy");
        if (at_kw("complete")) { take(); sc.policy = Policy::Complete; }
        else if (at_kw("visible")) { take(); sc.policy = Policy::Visible; }
        else if (at_kw("free")) { take(); sc.policy = Policy::Free; }
        else fail("expected 'complete', 'visible' or 'free', found '" + cur().text + "'",
                  {"complete", "visible", "free"});
        expect(Tok::LBrace, "'{'");
        while (!at(Tok::RBrace) && !at(Tok::End)) {
            Interaction ia;
            ia.span = cur().span;
            Token n = expect(Tok::Number, "sequence number");
            if (!n.unit.empty() || n.number < 1 || n.number != static_cast<int>(n.number))
                throw LocalError{ParseError{n.span, "sequence number must be a positive integer", {}}};
            ia.seq = static_cast<int>(n.number);
            if (at_kw("trigger")) { take(); ia.trigger = true; }
            ia.source = parse_path();
            expect(Tok::Arrow, "'->'");
            ia.target = parse_path();
            expect(Tok::Colon, "':'");
            ia.signal = expect_identifier();
            ia.condition = parse_cond();
            sc.interactions.push_back(std::move(ia));
        }
        expect(Tok::RBrace, "'}'");
        return sc;
    }

    // ---- modes / variants / stubs ----

    ModeMachine parse_modes() {
        ModeMachine mm;
        mm.span = cur().span;
        expect_kw("modes");
        mm.name = expect_identifier();
        expect_kw("on");
        mm.base = expect_identifier();
        expect(Tok::LBrace, "'{'");
        while (at_kw("state")) {
            ModeState st;
            st.span = cur().span;
            take();
            st.mode = expect_identifier();
            expect_kw("view");
            st.view = expect_identifier();
            mm.states.push_back(std::move(st));
        }
        if (mm.states.empty()) fail("a mode machine needs at least one state", {"state"});
        while (at_kw("from")) {
            ModeTransition tr;
            tr.span = cur().span;
            take();
            tr.from = expect_identifier();
            expect_kw("to");
            tr.to = expect_identifier();
            expect_kw("when");
            tr.signal = expect_identifier();
            tr.condition = parse_cond();
            mm.transitions.push_back(std::move(tr));
        }
        expect_kw("initial");
        mm.initial = expect_identifier();
        expect(Tok::RBrace, "'}'");
        return mm;
    }

    VariantSet parse_variants() {
        VariantSet vs;
        vs.span = cur().span;
        expect_kw("variants");
        vs.name = expect_identifier();
        expect_kw("of");
        vs.feature_view = expect_identifier();
        expect(Tok::LBrace, "'{'");
        while (at_kw("variant")) {
            VariantEntry v;
            v.span = cur().span;
            take();
            v.name = expect_identifier();
            expect_kw("view");
            v.view = expect_identifier();
            vs.variants.push_back(std::move(v));
        }
        if (vs.variants.empty()) fail("a variant set needs at least one variant", {"variant"});
        expect(Tok::RBrace, "'}'");
        return vs;
    }

    StubSet parse_stubs() {
        StubSet ss;
        ss.span = cur().span;
        expect_kw("stubs");
        ss.name = expect_identifier();
        expect_kw("on");
        ss.base = expect_identifier();
        expect(Tok::LBrace, "'{'");
        while (at_kw("rule")) {
            StubRule r;
            r.span = cur().span;
            take();
            r.owner = parse_path();
            expect_kw("when");
            r.guard_signal = expect_identifier();
            r.guard = parse_cond();
            expect_kw("emit");
            while (true) {
                std::string sig = expect_identifier();
                expect(Tok::Eq, "'='");
                r.emissions.emplace_back(sig, parse_value());
                if (!at(Tok::Comma)) break;
                take();
            }
            ss.rules.push_back(std::move(r));
        }
        expect(Tok::RBrace, "'}'");
        return ss;
    }

    void parse_element(Model& model) {
        if (at_kw("net")) model.elements.emplace_back(parse_net());
        else if (at_kw("view")) model.elements.emplace_back(parse_view());
        else if (at_kw("scenario")) model.elements.emplace_back(parse_scenario());
        else if (at_kw("modes")) model.elements.emplace_back(parse_modes());
        else if (at_kw("variants")) model.elements.emplace_back(parse_variants());
        else if (at_kw("stubs")) model.elements.emplace_back(parse_stubs());
        else fail("expected a top-level element, found '" + cur().text + "'",
                  {"net", "view", "scenario", "modes", "variants", "stubs"});
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

ParseResult parse_model_syntax(const std::string& text, const std::string& file) {
    Lexer lex(text, file);
    Parser parser(lex.run());
    return parser.run();
}

ParseResult parse_model(const std::string& text, const std::string& file) {
    ParseResult result = parse_model_syntax(text, file);
    if (result.ok()) {
        auto ref_errors = verify_references(result.model);
        result.errors.insert(result.errors.end(), ref_errors.begin(), ref_errors.end());
    }
    return result;
}

Condition parse_condition(const std::string& text) {
    Lexer lex(text, "<condition>");
    Parser parser(lex.run());
    try {
        return parser.parse_condition_only();
    } catch (const LocalError& e) {
        throw Error("PARSE", e.error.message + " (line " + std::to_string(e.error.span.line) +
                                 ", column " + std::to_string(e.error.span.column) + ")");
    }
}

}  // namespace fnet

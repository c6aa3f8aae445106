#include "nforge/errors.hpp"
#include "nforge/nichols_engine.hpp"

#include <cctype>
#include <sstream>

namespace nforge {

namespace {

using Linear = std::map<std::uint32_t, Cyc>;  // degree-one combination

struct Tok {
    enum Kind { name, label, integer, op, end } kind;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(std::string s) : s_(std::move(s)) {}

    Tok next() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ >= s_.size()) return {Tok::end, ""};
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t b = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return {Tok::integer, s_.substr(b, pos_ - b)};
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t b = pos_;
            while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            const std::size_t letters_end = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return {letters_end == pos_ ? Tok::name : Tok::label, s_.substr(b, pos_ - b)};
        }
        ++pos_;
        return {Tok::op, std::string(1, c)};
    }

private:
    std::string s_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    Parser(const std::string& line, std::size_t lineno, const BraidedSpace& b,
           const std::map<std::string, Cyc>& scalars, const std::map<std::string, Linear>& vecs)
        : lineno_(lineno), b_(b), scalars_(scalars), vecs_(vecs) {
        Lexer lx(line);
        for (Tok t = lx.next();; t = lx.next()) {
            toks_.push_back(t);
            if (t.kind == Tok::end) break;
        }
    }

    // Sides of a '=' chain.
    std::vector<TensorElement> chain() {
        std::vector<TensorElement> sides{expr()};
        while (accept("=")) sides.push_back(expr());
        expect_end();
        return sides;
    }

    Cyc scalar_value() {
        Cyc v = 1;
        bool neg = accept("-");
        if (peek().kind == Tok::name && peek().text == "root") {
            ++i_;
            expect("(");
            const long m = integer();
            expect(",");
            bool kneg = accept("-");
            const long k = integer();
            expect(")");
            v = Cyc::root(static_cast<unsigned>(m), kneg ? -k : k);
        } else {
            v = coefficient();
        }
        expect_end();
        return neg ? -v : v;
    }

    TensorElement linear_only() {
        TensorElement e = expr();
        expect_end();
        if (e.degree != 1) fail("a vec definition must be of degree one");
        return e;
    }

private:
    const Tok& peek() const { return toks_[i_]; }
    bool accept(const char* op) {
        if (peek().kind == Tok::op && peek().text == op) {
            ++i_;
            return true;
        }
        return false;
    }
    void expect(const char* op) {
        if (!accept(op)) fail(std::string("expected '") + op + "'");
    }
    void expect_end() {
        if (peek().kind != Tok::end) fail("unexpected '" + peek().text + "'");
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("line " + std::to_string(lineno_) + ": " + what);
    }
    long integer() {
        if (peek().kind != Tok::integer) fail("expected an integer");
        return std::stol(toks_[i_++].text);
    }
    long exponent() {
        if (!accept("^")) return 1;
        const bool neg = accept("-");
        const long e = integer();
        return neg ? -e : e;
    }

    bool is_vector_token(const Tok& t) const {
        if (t.kind != Tok::label && t.kind != Tok::name) return false;
        if (vecs_.count(t.text)) return true;
        for (std::size_t i = 0; i < b_.dim(); ++i)
            if (b_.label(i) == t.text) return true;
        return false;
    }

    Linear vector_of(const std::string& s) const {
        if (auto it = vecs_.find(s); it != vecs_.end()) return it->second;
        for (std::size_t i = 0; i < b_.dim(); ++i)
            if (b_.label(i) == s) return {{static_cast<std::uint32_t>(i), Cyc::one(b_.order())}};
        fail("unknown basis label '" + s + "'");
    }

    // INT, NAME, NAME^[-]INT, joined by optional '*' and divided by '/'.
    Cyc coefficient() {
        Cyc c = Cyc::one(b_.order());
        bool divide = false, any = false;
        for (;;) {
            const Tok& t = peek();
            if (t.kind == Tok::integer) {
                ++i_;
                const Cyc v(std::stol(t.text));
                if (divide && v.is_zero()) fail("division by zero");
                c = divide ? c / v : c * v;
            } else if (t.kind == Tok::name && !is_vector_token(t)) {
                ++i_;
                auto it = scalars_.find(t.text);
                if (it == scalars_.end()) fail("unbound scalar '" + t.text + "'");
                const Cyc v = it->second.pow(exponent());
                c = divide ? c / v : c * v;
            } else if (any && t.kind == Tok::op && (t.text == "*" || t.text == "/")) {
                divide = t.text == "/";
                ++i_;
                continue;
            } else {
                break;
            }
            any = true;
            divide = false;
        }
        return c;
    }

    TensorElement term(bool negative) {
        Cyc c = coefficient();
        if (negative) c = -c;
        std::vector<std::pair<std::vector<std::uint32_t>, Cyc>> acc{{{}, c}};
        while (is_vector_token(peek())) {
            const Linear v = vector_of(toks_[i_++].text);
            const long e = exponent();
            if (e < 0) fail("negative power of a vector");
            for (long r = 0; r < e; ++r) {
                std::vector<std::pair<std::vector<std::uint32_t>, Cyc>> next;
                for (const auto& [w, x] : acc)
                    for (const auto& [idx, y] : v) {
                        auto w2 = w;
                        w2.push_back(idx);
                        next.emplace_back(std::move(w2), x * y);
                    }
                acc = std::move(next);
            }
        }
        TensorElement out;
        if (acc.size() == 1 && acc.front().first.empty()) {
            if (!acc.front().second.is_zero()) fail("nonzero scalar term in a relation");
            return out;
        }
        out.degree = acc.front().first.size();
        for (const auto& [w, x] : acc) out.add(w, x);
        return out;
    }

    TensorElement expr() {
        TensorElement sum;
        bool negative = accept("-");
        if (!negative) accept("+");
        for (;;) {
            TensorElement t = term(negative);
            if (!t.terms.empty() || t.degree) merge(sum, t);
            if (accept("+")) negative = false;
            else if (accept("-")) negative = true;
            else break;
        }
        return sum;
    }

    void merge(TensorElement& into, const TensorElement& t) {
        if (into.degree == 0 && into.terms.empty()) into.degree = t.degree;
        if (into.degree != t.degree) fail("terms of different degrees");
        for (const auto& [w, c] : t.terms) into.add(w, c);
    }

    std::vector<Tok> toks_;
    std::size_t i_ = 0;
    std::size_t lineno_;
    const BraidedSpace& b_;
    const std::map<std::string, Cyc>& scalars_;
    const std::map<std::string, Linear>& vecs_;
};

TensorElement difference(const TensorElement& a, const TensorElement& b) {
    TensorElement d = a;
    if (d.degree == 0 && d.terms.empty()) d.degree = b.degree;
    for (const auto& [w, c] : b.terms) d.add(w, -c);
    return d;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

}  // namespace

std::vector<ParsedRelation> parse_relations(const std::string& text, const BraidedSpace& b,
                                            const std::map<std::string, Cyc>& bindings) {
    std::map<std::string, Cyc> scalars = bindings;
    std::map<std::string, Linear> vecs;
    std::vector<ParsedRelation> out;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;
        auto definition = [&](const char* kw) -> std::optional<std::pair<std::string, std::string>> {
            const std::string k = kw;
            if (line.rfind(k + " ", 0) != 0) return std::nullopt;
            const auto eq = line.find('=');
            if (eq == std::string::npos) throw ParseError("line " + std::to_string(lineno) + ": missing '='");
            return std::pair{trim(line.substr(k.size(), eq - k.size())), line.substr(eq + 1)};
        };
        if (auto d = definition("let")) {
            // Bindings supplied by the caller take precedence over file defaults.
            Parser p(d->second, lineno, b, scalars, vecs);
            Cyc v = p.scalar_value();
            if (!bindings.count(d->first)) scalars[d->first] = v;
            continue;
        }
        if (auto d = definition("vec")) {
            Parser p(d->second, lineno, b, scalars, vecs);
            Linear lin;
            for (const auto& [w, c] : p.linear_only().terms) lin[w.front()] = c;
            vecs[d->first] = std::move(lin);
            continue;
        }
        Parser p(line, lineno, b, scalars, vecs);
        const auto sides = p.chain();
        if (sides.size() < 2) throw ParseError("line " + std::to_string(lineno) + ": a relation needs '='");
        for (std::size_t i = 0; i + 1 < sides.size(); ++i) {
            ParsedRelation r;
            r.text = line;
            r.line = lineno;
            r.element = difference(sides[i], sides[i + 1]);
            if (r.element.degree == 0) throw ParseError("line " + std::to_string(lineno) + ": empty relation");
            out.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace nforge

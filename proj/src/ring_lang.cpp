#include "sally/ring_lang.hpp"

#include <cctype>
#include <optional>
#include <set>

#include "sally/errors.hpp"

namespace sally {

const IdealHandle* SourceFile::find(const std::string& name) const {
    for (const auto& [n, ideal] : ideals)
        if (n == name) return &ideal;
    return nullptr;
}

namespace {

enum class Tok { ident, integer, symbol, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t column;
};

struct Line {
    std::size_t number;
    std::vector<Token> tokens;
};

std::vector<Token> tokenize(std::string_view line, std::size_t number) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        const auto ch = static_cast<unsigned char>(line[i]);
        if (ch == '#') break;
        if (std::isspace(ch)) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isalpha(ch) || ch == '_') {
            while (i < line.size() && (std::isalnum(static_cast<unsigned char>(line[i])) || line[i] == '_')) ++i;
            out.push_back({Tok::ident, std::string(line.substr(start, i - start)), start + 1});
        } else if (std::isdigit(ch)) {
            while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
            out.push_back({Tok::integer, std::string(line.substr(start, i - start)), start + 1});
        } else if (std::string_view("+-*^,=").find(static_cast<char>(ch)) != std::string_view::npos) {
            out.push_back({Tok::symbol, std::string(1, static_cast<char>(ch)), start + 1});
            ++i;
        } else {
            throw ParseError("syntax error: unexpected character '" + std::string(1, static_cast<char>(ch)) + "'",
                             number, start + 1);
        }
    }
    out.push_back({Tok::end, "", line.size() + 1});
    return out;
}

/// Decimal literal as an unsigned value, nullopt on overflow past `limit`.
std::optional<std::uint64_t> to_unsigned(const std::string& digits, std::uint64_t limit) {
    std::uint64_t v = 0;
    for (char c : digits) {
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
        if (v > limit) return std::nullopt;
    }
    return v;
}

class Cursor {
public:
    Cursor(const Line& line, std::size_t pos = 0) : line_(line), pos_(pos) {}

    const Token& peek() const { return line_.tokens[pos_]; }
    const Token& next() { return line_.tokens[pos_ < line_.tokens.size() - 1 ? pos_++ : pos_]; }
    bool at_symbol(char c) const { return peek().kind == Tok::symbol && peek().text[0] == c; }
    bool at_end() const { return peek().kind == Tok::end; }

    [[noreturn]] void fail(const std::string& message, const Token& at) const {
        throw ParseError(message, line_.number, at.column);
    }
    [[noreturn]] void fail(const std::string& message) const { fail(message, peek()); }

    void expect_symbol(char c) {
        if (!at_symbol(c)) fail("syntax error: expected '" + std::string(1, c) + "'");
        next();
    }
    void expect_end() {
        if (!at_end()) fail("syntax error: unexpected '" + peek().text + "'");
    }
    const Token& expect_ident(const std::string& what) {
        if (peek().kind != Tok::ident) fail("syntax error: expected " + what);
        return next();
    }

    std::size_t line() const { return line_.number; }

private:
    const Line& line_;
    std::size_t pos_;
};

class PolyParser {
public:
    explicit PolyParser(const PolyRingPtr& ring) : ring_(ring) {
        for (std::size_t i = 0; i < ring->names.size(); ++i) index_[ring->names[i]] = i;
    }

    /// poly (',' poly)* up to end of line; each generator checked for homogeneity.
    std::vector<Poly> list(Cursor& cur) {
        std::vector<Poly> out;
        for (;;) {
            const Token start = cur.peek();
            Poly p = poly(cur);
            if (!p.is_homogeneous()) cur.fail("non-homogeneous generator: " + p.to_string(), start);
            out.push_back(std::move(p));
            if (cur.at_end()) break;
            cur.expect_symbol(',');
        }
        return out;
    }

private:
    Poly poly(Cursor& cur) {
        std::vector<Term> terms;
        bool negative = false;
        if (cur.at_symbol('+') || cur.at_symbol('-')) negative = cur.next().text[0] == '-';
        for (;;) {
            Term t = term(cur);
            if (negative) t.coeff = ring_->field.neg(t.coeff);
            terms.push_back(t);
            if (!(cur.at_symbol('+') || cur.at_symbol('-'))) break;
            negative = cur.next().text[0] == '-';
        }
        return Poly::from_terms(ring_, std::move(terms));
    }

    static bool starts_factor(const Token& t) { return t.kind == Tok::ident || t.kind == Tok::integer; }

    Term term(Cursor& cur) {
        Term t{Monomial(ring_->nvars()), 1};
        if (!starts_factor(cur.peek())) cur.fail("syntax error: expected a term");
        for (;;) {
            factor(cur, t);
            if (cur.at_symbol('*')) {
                cur.next();
                if (!starts_factor(cur.peek())) cur.fail("syntax error: expected a factor after '*'");
                continue;
            }
            if (!starts_factor(cur.peek())) break;
        }
        return t;
    }

    void factor(Cursor& cur, Term& t) {
        const Token tok = cur.next();
        std::uint64_t power = 1;
        if (cur.at_symbol('^')) {
            cur.next();
            const Token& e = cur.peek();
            if (e.kind != Tok::integer) cur.fail("syntax error: expected an exponent");
            auto v = to_unsigned(e.text, 255);
            if (!v) cur.fail("exponent too large (max 255)");
            power = *v;
            cur.next();
        }
        const PrimeField& field = ring_->field;
        if (tok.kind == Tok::integer) {
            Coeff c = 0;
            for (char ch : tok.text) c = field.add(field.mul(c, 10 % field.modulus()), static_cast<Coeff>(ch - '0') % field.modulus());
            Coeff p = 1;
            for (std::uint64_t k = 0; k < power; ++k) p = field.mul(p, c);
            t.coeff = field.mul(t.coeff, p);
            return;
        }
        auto it = index_.find(tok.text);
        if (it == index_.end()) cur.fail("unknown variable '" + tok.text + "'", tok);
        const std::uint64_t e = t.mono[it->second] + power;
        if (e > 255) cur.fail("exponent too large (max 255)", tok);
        t.mono.set(it->second, static_cast<unsigned>(e));
    }

    PolyRingPtr ring_;
    std::map<std::string, std::size_t> index_;
};

}  // namespace

SourceFile parse_source(std::string_view text, Backend backend) {
    std::vector<Line> lines;
    {
        std::size_t number = 1, start = 0;
        while (start <= text.size()) {
            std::size_t stop = text.find('\n', start);
            if (stop == std::string_view::npos) stop = text.size();
            std::string_view raw = text.substr(start, stop - start);
            if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
            lines.push_back({number, tokenize(raw, number)});
            ++number;
            start = stop + 1;
        }
    }

    std::optional<std::uint32_t> prime;
    std::vector<std::string> names;
    bool have_vars = false, have_order = false;
    MonomialOrder order = MonomialOrder::grevlex();
    std::vector<const Line*> body;

    for (const Line& line : lines) {
        Cursor cur(line);
        if (cur.at_end()) continue;
        const Token& head = cur.expect_ident("a directive");
        if (head.text == "char") {
            if (prime) cur.fail("duplicate char declaration", head);
            const Token& v = cur.peek();
            if (v.kind != Tok::integer) cur.fail("syntax error: expected the characteristic");
            auto p = to_unsigned(v.text, (1ull << 31) - 1);
            if (!p || !is_prime(*p)) cur.fail("characteristic " + v.text + " is not a prime below 2^31");
            prime = static_cast<std::uint32_t>(*p);
            cur.next();
            cur.expect_end();
        } else if (head.text == "vars") {
            if (have_vars) cur.fail("duplicate vars declaration", head);
            have_vars = true;
            std::set<std::string> seen;
            while (!cur.at_end()) {
                const Token& v = cur.expect_ident("a variable name");
                if (!seen.insert(v.text).second) cur.fail("duplicate variable '" + v.text + "'", v);
                names.push_back(v.text);
            }
            if (names.empty()) cur.fail("syntax error: vars needs at least one variable");
            if (names.size() > kMaxVars) cur.fail("too many variables (max " + std::to_string(kMaxVars) + ")", head);
        } else if (head.text == "order") {
            if (have_order) cur.fail("duplicate order declaration", head);
            have_order = true;
            const Token& o = cur.expect_ident("grevlex or lex");
            if (o.text == "grevlex")
                order = MonomialOrder::grevlex();
            else if (o.text == "lex")
                order = MonomialOrder::lex();
            else
                cur.fail("unknown order '" + o.text + "'", o);
            cur.expect_end();
        } else if (head.text == "mod" || head.text == "ideal" || head.text == "expect") {
            body.push_back(&line);
        } else {
            cur.fail("syntax error: unknown directive '" + head.text + "'", head);
        }
    }
    const std::size_t last = lines.size();
    if (!prime) throw ParseError("missing char declaration", last, 1);
    if (!have_vars) throw ParseError("missing vars declaration", last, 1);

    auto poly_ring = make_poly_ring(names, *prime, order);
    PolyParser polys(poly_ring);

    std::vector<Poly> defining;
    const Line* first_mod = nullptr;
    for (const Line* line : body) {
        Cursor cur(*line);
        if (cur.next().text != "mod") continue;
        if (!first_mod) first_mod = line;
        auto gens = polys.list(cur);
        defining.insert(defining.end(), gens.begin(), gens.end());
    }

    SourceFile out;
    try {
        out.ring = RingSpec::create(poly_ring, defining, backend);
    } catch (const StructuralError& e) {
        throw ParseError(e.what(), first_mod ? first_mod->number : 1, 1);
    }

    for (const Line* line : body) {
        Cursor cur(*line);
        const Token& head = cur.next();
        if (head.text == "ideal") {
            const Token& name = cur.expect_ident("an ideal name");
            if (out.find(name.text)) cur.fail("duplicate ideal name '" + name.text + "'", name);
            cur.expect_symbol('=');
            out.ideals.emplace_back(name.text, IdealHandle(out.ring, polys.list(cur)));
        } else if (head.text == "expect") {
            const Token& key = cur.expect_ident("an expectation key");
            if (out.expected.count(key.text)) cur.fail("duplicate expectation '" + key.text + "'", key);
            cur.expect_symbol('=');
            bool negative = false;
            if (cur.at_symbol('-')) {
                cur.next();
                negative = true;
            }
            const Token& v = cur.peek();
            if (v.kind != Tok::integer) cur.fail("syntax error: expected an integer");
            auto value = to_unsigned(v.text, 1ull << 62);
            if (!value) cur.fail("integer out of range");
            cur.next();
            cur.expect_end();
            auto signed_value = static_cast<std::int64_t>(*value);
            out.expected[key.text] = negative ? -signed_value : signed_value;
        }
    }
    return out;
}

NamedInstance to_instance(const SourceFile& source, std::string name) {
    const IdealHandle* ideal = source.find("I");
    const IdealHandle* reduction = source.find("Q");
    if (!ideal) throw ParseError("no ideal named I", 0, 0);
    if (!reduction) throw ParseError("no ideal named Q", 0, 0);
    NamedInstance inst{std::move(name), source.ring, *ideal, *reduction, std::nullopt, source.expected};
    if (const IdealHandle* h = source.find("h")) inst.adjoin = *h;
    return inst;
}

namespace {

std::string generator_list(std::span<const Poly> gens) {
    if (gens.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? ", " : "") + gens[i].to_string();
    return s;
}

}  // namespace

std::string serialize(const NamedInstance& instance) {
    const RingSpec& ring = *instance.ring;
    const MonomialOrder& order = ring.poly_ring()->order;
    if (order.kind() == OrderKind::block) throw StructuralError("block orders have no textual form");
    std::string out = "# " + instance.name + "\n";
    out += "char " + std::to_string(ring.characteristic()) + "\n";
    out += "vars";
    for (const auto& n : ring.poly_ring()->names) out += " " + n;
    out += "\norder " + order.name() + "\n";
    if (!ring.defining().empty()) out += "mod " + generator_list(ring.defining()) + "\n";
    out += "ideal I = " + generator_list(instance.ideal.gens()) + "\n";
    out += "ideal Q = " + generator_list(instance.reduction.gens()) + "\n";
    if (instance.adjoin) out += "ideal h = " + generator_list(instance.adjoin->gens()) + "\n";
    for (const auto& [key, value] : instance.expected) out += "expect " + key + " = " + std::to_string(value) + "\n";
    return out;
}

}  // namespace sally

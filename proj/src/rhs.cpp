#include "ddeint/rhs.hpp"

#include <cctype>

namespace ddeint {

RhsSpec RhsSpec::constant(const Interval& c) {
    RhsSpec r;
    r.nodes_.push_back({Op::kConst, c, -1, -1});
    r.root_ = 0;
    return r;
}

RhsSpec RhsSpec::delayed() {
    RhsSpec r;
    r.nodes_.push_back({Op::kDelayed, Interval(), -1, -1});
    r.root_ = 0;
    return r;
}

RhsSpec RhsSpec::current() {
    RhsSpec r;
    r.nodes_.push_back({Op::kCurrent, Interval(), -1, -1});
    r.root_ = 0;
    return r;
}

RhsSpec RhsSpec::combine(const RhsSpec& a, const RhsSpec& b, Op op) {
    RhsSpec r = a;
    const int offset = static_cast<int>(r.nodes_.size());
    for (Node n : b.nodes_) {
        if (n.lhs >= 0) n.lhs += offset;
        if (n.rhs >= 0) n.rhs += offset;
        r.nodes_.push_back(n);
    }
    r.nodes_.push_back({op, Interval(), a.root_, offset + b.root_});
    r.root_ = static_cast<int>(r.nodes_.size()) - 1;
    return r;
}

RhsSpec RhsSpec::pow(const RhsSpec& base, int exponent) {
    if (exponent < 0) throw ParseError("negative exponent in rhs");
    if (exponent == 0) return constant(Interval(1.0));
    // binary powering over shared subterms
    RhsSpec r = base;
    int sq = r.root_;            // current power-of-two factor
    int acc = -1;                // accumulated product
    int e = exponent;
    auto emit_mul = [&r](int a, int b) {
        r.nodes_.push_back({Op::kMul, Interval(), a, b});
        return static_cast<int>(r.nodes_.size()) - 1;
    };
    while (e > 0) {
        if (e & 1) acc = (acc < 0) ? sq : emit_mul(acc, sq);
        e >>= 1;
        if (e) sq = emit_mul(sq, sq);
    }
    r.root_ = acc;
    return r;
}

RhsSpec mg_rhs(const Interval& beta, const Interval& gamma, int n_exp) {
    if (n_exp < 1) throw ParseError("mg_rhs needs n_exp >= 1");
    RhsSpec z1 = RhsSpec::delayed();
    RhsSpec numerator = RhsSpec::constant(beta) * z1;
    RhsSpec denominator = RhsSpec::constant(Interval(1.0)) + RhsSpec::pow(z1, n_exp);
    return numerator / denominator - RhsSpec::constant(gamma) * RhsSpec::current();
}

namespace {

struct Parser {
    std::string_view s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what + " at offset " + std::to_string(pos) + " in rhs \"" +
                         std::string(s) + "\"");
    }

    RhsSpec expression() {
        RhsSpec lhs = term();
        for (;;) {
            if (eat('+'))
                lhs = lhs + term();
            else if (eat('-'))
                lhs = lhs - term();
            else
                return lhs;
        }
    }
    RhsSpec term() {
        RhsSpec lhs = power();
        for (;;) {
            if (eat('*'))
                lhs = lhs * power();
            else if (eat('/'))
                lhs = lhs / power();
            else
                return lhs;
        }
    }
    RhsSpec power() {
        RhsSpec base = factor();
        if (eat('^')) {
            skip_ws();
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) fail("expected integer exponent");
            int e = std::stoi(std::string(s.substr(start, pos - start)));
            return RhsSpec::pow(base, e);
        }
        return base;
    }
    RhsSpec factor() {
        skip_ws();
        if (eat('(')) {
            RhsSpec inner = expression();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (eat('-')) return RhsSpec::constant(Interval(0.0)) - factor();
        if (pos + 1 < s.size() && s[pos] == 'z') {
            if (s[pos + 1] == '1') {
                pos += 2;
                return RhsSpec::delayed();
            }
            if (s[pos + 1] == '2') {
                pos += 2;
                return RhsSpec::current();
            }
            fail("unknown variable");
        }
        size_t start = pos;
        while (pos < s.size() &&
               (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.'))
            ++pos;
        if (start == pos) fail("expected factor");
        return RhsSpec::constant(parse_decimal(s.substr(start, pos - start)));
    }
};

} // namespace

RhsSpec RhsSpec::parse(std::string_view text) {
    Parser p{text};
    RhsSpec r = p.expression();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

} // namespace ddeint

#ifndef DDEINT_RHS_HPP
#define DDEINT_RHS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "ddeint/interval.hpp"

namespace ddeint {

// Right-hand side f(z1, z2) of the delay equation as an expression DAG over
// the delayed value z1 and the current value z2.  Integer powers are lowered
// to multiplication chains when the tree is built, so evaluation only sees
// {constant, argument, +, -, *, /} and children always precede parents.
class RhsSpec {
  public:
    enum class Op { kConst, kDelayed, kCurrent, kAdd, kSub, kMul, kDiv };
    struct Node {
        Op op;
        Interval value; // kConst only
        int lhs = -1;
        int rhs = -1;
    };

    static RhsSpec constant(const Interval& c);
    static RhsSpec delayed(); // z1
    static RhsSpec current(); // z2

    friend RhsSpec operator+(const RhsSpec& a, const RhsSpec& b) { return combine(a, b, Op::kAdd); }
    friend RhsSpec operator-(const RhsSpec& a, const RhsSpec& b) { return combine(a, b, Op::kSub); }
    friend RhsSpec operator*(const RhsSpec& a, const RhsSpec& b) { return combine(a, b, Op::kMul); }
    friend RhsSpec operator/(const RhsSpec& a, const RhsSpec& b) { return combine(a, b, Op::kDiv); }
    static RhsSpec pow(const RhsSpec& base, int exponent);

    const std::vector<Node>& nodes() const { return nodes_; }
    int root() const { return root_; }

    // infix text over z1, z2, decimal literals and + - * / ^ ( )
    static RhsSpec parse(std::string_view text);

  private:
    static RhsSpec combine(const RhsSpec& a, const RhsSpec& b, Op op);
    std::vector<Node> nodes_;
    int root_ = -1;
};

// beta * z1 / (1 + z1^n_exp) - gamma * z2
RhsSpec mg_rhs(const Interval& beta, const Interval& gamma, int n_exp);

} // namespace ddeint

#endif

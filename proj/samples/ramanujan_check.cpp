// Both sides of Ramanujan's formula for zeta(2m+1) at alpha = pi, and of its character twist
// with the real character mod 5, printed side by side.

#include <iostream>

#include "charzeta/charzeta.hpp"

namespace {

void show(const charzeta::IdentityReport& r) {
    std::cout << to_string(r.identity_id);
    for (const auto& [k, v] : r.params) std::cout << ' ' << k << '=' << v;
    std::cout << "\n  lhs " << r.lhs.re.to_string(r.digits) << "\n  rhs " << r.rhs.re.to_string(r.digits)
              << "\n  relative residual " << r.rel_residual.to_string(3) << (r.pass ? "  pass\n" : "  FAIL\n");
}

}  // namespace

int main() {
    using namespace charzeta;
    PrecisionContext ctx = make_context(40);
    TruncationBudget budget = TruncationBudget::from(ctx);
    Real pi = ctx.pi();
    for (long m : {1L, 2L, 3L}) show(verify_classical_ramanujan(m, pi, ctx, budget));
    show(verify_character_ramanujan(3, 1, pi, parse_character("q=5;values=1,-1,-1,1"), ctx, budget));
}

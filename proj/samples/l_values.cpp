// Dirichlet L-values for every primitive character of a modulus, at s = 1/2, 1 and -1.
//
//   sample_l_values [q] [digits]

#include <cstdlib>
#include <iostream>

#include "charzeta/charzeta.hpp"

int main(int argc, char** argv) {
    using namespace charzeta;
    long q = argc > 1 ? std::atol(argv[1]) : 7;
    int digits = argc > 2 ? std::atoi(argv[2]) : 30;
    try {
        PrecisionContext ctx = make_context(digits);
        for (const auto& chi : enumerate_characters(q)) {
            if (!chi.is_primitive()) continue;
            std::cout << chi.literal() << (chi.is_even() ? "  even\n" : "  odd\n");
            auto show = [&](const char* label, const Complex& z) {
                std::cout << "  " << label << " = " << z.re.to_string(digits) << (z.im.sign() < 0 ? " - " : " + ")
                          << abs(z.im).to_string(digits) << "i\n";
            };
            show("L(1/2)", dirichlet_l(Real(mpq_class(1, 2), ctx.bits()), chi, ctx));
            show("L(1)  ", dirichlet_l(Real(1, ctx.bits()), chi, ctx));
            show("L(-1) ", l_at_negative_integer(1, chi, ctx));
        }
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }
}

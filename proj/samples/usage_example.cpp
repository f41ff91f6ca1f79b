// Decides whether the centralizers of two rational matrices are conjugate
// and prints the witness polynomials and conjugator.

#include <iostream>

#include "gentype/gentype.hpp"

int main() {
    using namespace gentype;
    const Field q = Field::rationals();
    const Matrix x = companion(Poly::from_ints(q, {-2, 0, 1}));
    const Matrix y = companion(Poly::from_ints(q, {-8, 0, 1}));

    std::cout << "type of X: " << generalized_type(cycle_type(x)).to_string() << "\n";
    std::cout << "dim Cent(X) = " << centralizer_basis(x).dim << "\n";

    const auto cert = centralizers_conjugate(x, y);
    std::cout << "conjugate: " << (cert.verdict ? "yes" : "no") << "\n";
    if (cert.verdict) {
        std::cout << "p = " << cert.p->to_string() << ", q = " << cert.q->to_string() << "\n";
        std::cout << "conjugator:\n" << cert.conjugator->to_string() << "\n";
    }

    const auto rep = sn_cent_equal(Permutation::parse_cycles("(1 2)", 4), Permutation::parse_cycles("(3 4)", 4));
    std::cout << "(1 2) vs (3 4) in S_4: " << to_string(rep.kind) << "\n";
}

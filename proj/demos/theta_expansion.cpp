/* Demo: expand the normalized theta function of A2 over the two polynomial
 * families and print the weighted sums next to the product formula. */

#include <iostream>

#include "macq/expansion.hpp"

int main() {
        using namespace macq;
        Frac qdeg(4);
        Engine E('A', 2, Frac(2) * qdeg);

        CharSeries dagsum, barsum;
        for (const auto& b : weights_in_ball(E.rs, Frac(2) * qdeg)) {
                Frac en = E.rs.norm2(b) / Frac(2);
                if (en > qdeg)
                        continue;
                QSeries k = QSeries::monomial(1, en, E.Dwork) *
                            E.h0(b).inverse(E.Dwork);
                dagsum += E.edag_star(b).scaled(k);
                if (E.rs.antidominant(b))
                        barsum += E.ebar(b).scaled(k);
        }
        CharSeries th = theta_hat(E.rs, qdeg);

        std::cout << "normalized theta of " << E.rs.name() << " to q^"
                  << qdeg.str() << ":\n"
                  << th.str() << "\n";
        std::cout << "sum over all weights (dag-star family): "
                  << (CharSeries::agree(dagsum.truncated(qdeg), th)
                          ? "matches"
                          : "DIFFERS")
                  << "\n";
        std::cout << "sum over antidominant weights (bar family): "
                  << (CharSeries::agree(barsum.truncated(qdeg), th)
                          ? "matches"
                          : "DIFFERS")
                  << "\n";
        return 0;
}

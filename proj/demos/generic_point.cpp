/* Demo: build the eigenfunction family at the rational point t = 5/7 for a
 * few A2 weights and compare their principal evaluations with the closed
 * lambda-set product. */

#include <iostream>

#include "macq/generic_e.hpp"

int main() {
        using namespace macq;
        TParam t{mpq_class(5) / 7, 1, 1};
        GenericEngine G('A', 2, t, Frac(6));

        for (const Weight& b :
             std::vector<Weight>{{0, 0}, {1, 0}, {-1, 0}, {1, 1}, {-1, -1}}) {
                const CharSeries& E = G.epoly(b);
                std::cout << "E_(" << b[0] << "," << b[1] << ") has "
                          << E.m.size() << " monomials; evaluation at the "
                          << "principal point:\n  "
                          << G.eval_point(E, {0, 0}).str() << "\n  closed "
                          << "product:\n  " << G.eval_norm_closed(b).str()
                          << "\n";
        }
        return 0;
}

// demo_resolution.cpp -- resolve one small triplet and print its dual graph
//
// The example is the weight-(11,7) type on P^2: E = 5l with a single point
// of degree 5 whose contact with the line is 4.  The chain coefficients come
// out as (1,2,3,4,0) and the support graph is a path of five vertices.

#include <iostream>

#include "delpezzo/delpezzo.hpp"

using namespace delpezzo;

int main() {
    const auto p2 = SurfaceModel::p2();
    WeightedConfig config(p2, {{CurveRole::line(0), Rational(5)}});
    std::vector<SubschemePoint> delta = {SubschemePoint::on_curve(0, 5, 4)};
    TripletConfig t(MultiIndex(11, 7), config, delta);

    ValidationReport rep = validate(t);
    std::cout << "valid: " << (rep.valid ? "yes" : "no")
              << ", normalized: " << (is_normalized(t) ? "yes" : "no") << "\n";
    if (auto cls = classify_triplet(t)) std::cout << "type: " << cls->label << "\n";

    auto L = fundamental_divisor(t.index, t.config);
    auto res = eliminate(t.config, t.delta, Rational(t.index.s()), *L);
    for (const auto& c : res.model->curves)
        std::cout << "  " << c.label << "  self^2 = " << c.self_int
                  << "  coeff(E_M) = " << c.em_coeff << "\n";
    std::cout << to_dot(dual_graph_of(*res.model), "[(11,7),5]_0");
    return 0;
}

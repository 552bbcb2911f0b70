#include "unirep/intertwine.hpp"

#include <stdexcept>

#include "unirep/uniserial.hpp"

namespace unirep {

HomReport hom_space(const Representation& v, const Representation& w, int jobs) {
    if (v.structure != w.structure)
        throw std::invalid_argument("hom_space: modules live over different structures");

    const Representation dual = dual_rep(v);
    const auto& pairing = *dual.dual_pairing;
    const GradedModule g = tensor_product(dual, w);
    const SocleReport soc_report = socle(g, jobs);

    HomReport out;
    for (const auto& degree : soc_report.degrees) {
        for (const auto& part : degree.parts) {
            if (part.mu != 0)
                continue;
            for (const auto& hw : part.highest_weight_basis) {
                // u = sum c * (dual basis p) (x) (w basis q); dual basis p pairs
                // against v as sign[p] * (v basis index[p])^*
                SparseMatrix T(w.dim, v.dim);
                for (const auto& [idx, c] : hw) {
                    const int p = idx / w.dim;
                    const int q = idx % w.dim;
                    const int sgn = pairing.sign[static_cast<std::size_t>(p)];
                    T.add(q, pairing.index[static_cast<std::size_t>(p)], sgn < 0 ? -c : c);
                }
                for (GeneratorId gen : v.structure.generators()) {
                    if (!(T * v.action(gen) == w.action(gen) * T))
                        throw std::logic_error("hom_space: extracted operator fails to intertwine " + gen.name());
                }
                out.basis.push_back(std::move(T));
                out.degree.push_back(degree.t);
            }
        }
    }
    out.dimension = static_cast<int>(out.basis.size());
    return out;
}

} // namespace unirep

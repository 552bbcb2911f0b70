#include "unirep/representation.hpp"

#include <sstream>
#include <stdexcept>

namespace unirep {

const SparseMatrix& Representation::action(GeneratorId g) const {
    auto it = actions.find(g);
    if (it == actions.end())
        throw std::invalid_argument("representation has no action for generator " + g.name());
    return it->second;
}

int Representation::layer_of(int idx) const {
    for (int i = 0; i < layer_count(); ++i)
        if (idx < layer_offsets[static_cast<std::size_t>(i) + 1])
            return i;
    throw std::out_of_range("basis index outside layered carrier");
}

Representation make_layered(const LieStructure& structure, std::vector<int> layer_weights) {
    Representation rep(structure);
    rep.layers = std::move(layer_weights);
    rep.layer_offsets.resize(rep.layers.size() + 1, 0);
    for (std::size_t i = 0; i < rep.layers.size(); ++i) {
        if (rep.layers[i] < 0)
            throw std::invalid_argument("negative layer weight");
        rep.layer_offsets[i + 1] = rep.layer_offsets[i] + rep.layers[i] + 1;
    }
    rep.dim = rep.layer_offsets.back();
    rep.weights.resize(static_cast<std::size_t>(rep.dim));
    for (std::size_t i = 0; i < rep.layers.size(); ++i)
        for (int k = 0; k <= rep.layers[i]; ++k)
            rep.weights[static_cast<std::size_t>(rep.layer_offsets[i] + k)] = rep.layers[i] - 2 * k;

    for (GeneratorId g : structure.generators()) {
        SparseMatrix action(rep.dim, rep.dim);
        if (!g.is_radical()) {
            for (std::size_t i = 0; i < rep.layers.size(); ++i) {
                const SparseMatrix block = sl2_irrep_action(rep.layers[i], g);
                const int off = rep.layer_offsets[i];
                for (int r = 0; r < block.rows(); ++r)
                    for (const auto& [c, v] : block.row(r))
                        action.set(off + r, off + c, v);
            }
        }
        rep.actions.emplace(g, std::move(action));
    }
    return rep;
}

std::string AxiomViolation::describe() const {
    std::ostringstream out;
    out << "[" << x.name() << "," << y.name() << "] entry (" << row << "," << col << "): expected "
        << expected.str() << ", got " << got.str();
    return out.str();
}

AxiomReport check_module_axioms(const Representation& rep) {
    AxiomReport report;
    const auto& gens = rep.structure.generators();
    for (std::size_t a = 0; a < gens.size(); ++a) {
        for (std::size_t b = a + 1; b < gens.size(); ++b) {
            const GeneratorId x = gens[a], y = gens[b];
            const SparseMatrix& mx = rep.action(x);
            const SparseMatrix& my = rep.action(y);
            SparseMatrix commutator = mx * my - my * mx;
            SparseMatrix expected(rep.dim, rep.dim);
            for (const auto& term : rep.structure.bracket(x, y))
                expected = expected + rep.action(term.gen).scaled(term.coeff);
            ++report.pairs_checked;
            if (commutator == expected)
                continue;
            const SparseMatrix diff = commutator - expected;
            for (int i = 0; i < diff.rows(); ++i) {
                for (const auto& [j, v] : diff.row(i)) {
                    (void)v;
                    report.violations.push_back({x, y, i, j, expected.at(i, j), commutator.at(i, j)});
                    if (report.violations.size() > 64)
                        return report; // enough evidence
                }
            }
        }
    }
    return report;
}

} // namespace unirep

#include "unirep/tensorsocle.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "unirep/parallel.hpp"

namespace unirep {

std::string to_string(const IrrepMultiset& ms) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (const auto& [mu, mult] : ms) {
        if (!first)
            out << ", ";
        first = false;
        out << "V(" << mu << ")";
        if (mult > 1)
            out << "x" << mult;
    }
    out << "}";
    return out.str();
}

GradedModule tensor_product(const Representation& a, const Representation& b) {
    if (a.structure != b.structure)
        throw std::invalid_argument("tensor_product: factors live over different structures");
    if (a.layer_count() == 0 || b.layer_count() == 0)
        throw std::invalid_argument("tensor_product: factors must be layered carriers");

    GradedModule g(a, b);
    Representation& total = g.total;
    total.dim = a.dim * b.dim;
    total.label = a.label + " (x) " + b.label;
    total.weights.resize(static_cast<std::size_t>(total.dim));
    g.grade.resize(static_cast<std::size_t>(total.dim));
    for (int p = 0; p < a.dim; ++p) {
        for (int q = 0; q < b.dim; ++q) {
            const int idx = g.index(p, q);
            total.weights[static_cast<std::size_t>(idx)] =
                a.weights[static_cast<std::size_t>(p)] + b.weights[static_cast<std::size_t>(q)];
            g.grade[static_cast<std::size_t>(idx)] = {a.layer_of(p), b.layer_of(q)};
        }
    }
    g.max_degree = a.layer_count() + b.layer_count() - 2;

    for (GeneratorId gen : a.structure.generators()) {
        const SparseMatrix& ma = a.action(gen);
        const SparseMatrix& mb = b.action(gen);
        SparseMatrix action(total.dim, total.dim);
        // x (x) 1
        for (int r = 0; r < ma.rows(); ++r)
            for (const auto& [c, v] : ma.row(r))
                for (int q = 0; q < b.dim; ++q)
                    action.add(g.index(r, q), g.index(c, q), v);
        // 1 (x) x
        for (int r = 0; r < mb.rows(); ++r)
            for (const auto& [c, v] : mb.row(r))
                for (int p = 0; p < a.dim; ++p)
                    action.add(g.index(p, r), g.index(p, c), v);
        total.actions.emplace(gen, std::move(action));
    }
    return g;
}

IrrepMultiset DegreeInvariants::multiset() const {
    IrrepMultiset out;
    for (const auto& part : parts)
        out[part.mu] = part.mult;
    return out;
}

int SocleReport::socle_dimension() const {
    int total = 0;
    for (const auto& d : degrees)
        total += d.dimension();
    return total;
}

namespace {

std::vector<GeneratorId> radical_generators(const LieStructure& structure) {
    std::vector<GeneratorId> out;
    for (GeneratorId g : structure.generators())
        if (g.is_radical())
            out.push_back(g);
    return out;
}

// Kernel of every radical generator restricted to one (degree, weight) block.
std::vector<SparseVec> block_kernel(const GradedModule& g, const std::vector<int>& block) {
    const auto radical = radical_generators(g.total.structure);
    std::map<std::pair<std::size_t, int>, SparseVec> constraint_rows;
    for (std::size_t gi = 0; gi < radical.size(); ++gi) {
        const SparseMatrix& action = g.total.action(radical[gi]);
        for (std::size_t lc = 0; lc < block.size(); ++lc) {
            SparseVec unit;
            unit.emplace(block[lc], Scalar::one());
            for (const auto& [r, v] : action.apply(unit))
                constraint_rows[{gi, r}].emplace(static_cast<int>(lc), v);
        }
    }
    std::vector<SparseVec> rows;
    rows.reserve(constraint_rows.size());
    for (auto& [key, row] : constraint_rows)
        rows.push_back(std::move(row));
    const Subspace kernel = kernel_of_rows(rows, static_cast<int>(block.size()));

    std::vector<SparseVec> lifted;
    lifted.reserve(static_cast<std::size_t>(kernel.dim()));
    for (const auto& kv : kernel.basis()) {
        SparseVec v;
        for (const auto& [lc, value] : kv)
            v.emplace(block[static_cast<std::size_t>(lc)], value);
        lifted.push_back(std::move(v));
    }
    return lifted;
}

// Splits a radical kernel (weight-homogeneous vectors) into highest-weight parts.
std::vector<IsotypicPart> decompose_kernel(const GradedModule& g, const std::vector<SparseVec>& kernel) {
    const SparseMatrix& raising = g.total.action(GeneratorId::e());
    std::map<int, std::vector<SparseVec>, std::greater<int>> by_weight;
    for (const auto& v : kernel)
        by_weight[g.total.weights[static_cast<std::size_t>(v.begin()->first)]].push_back(v);

    std::vector<IsotypicPart> parts;
    for (const auto& [mu, vecs] : by_weight) {
        if (mu < 0)
            continue;
        // highest weight vectors: combinations killed by E
        std::map<int, SparseVec> rows_by_ambient;
        std::vector<SparseVec> images;
        images.reserve(vecs.size());
        for (std::size_t k = 0; k < vecs.size(); ++k) {
            images.push_back(raising.apply(vecs[k]));
            for (const auto& [r, v] : images.back())
                rows_by_ambient[r].emplace(static_cast<int>(k), v);
        }
        std::vector<SparseVec> rows;
        rows.reserve(rows_by_ambient.size());
        for (auto& [r, row] : rows_by_ambient)
            rows.push_back(std::move(row));
        const Subspace coeff_kernel = kernel_of_rows(rows, static_cast<int>(vecs.size()));
        if (coeff_kernel.dim() == 0)
            continue;
        IsotypicPart part{mu, coeff_kernel.dim(), {}};
        for (const auto& coeffs : coeff_kernel.basis()) {
            SparseVec hw;
            for (const auto& [k, c] : coeffs)
                vec_add_scaled(hw, c, vecs[static_cast<std::size_t>(k)]);
            part.highest_weight_basis.push_back(std::move(hw));
        }
        parts.push_back(std::move(part));
    }
    return parts;
}

struct Block {
    int t;
    int weight;
    std::vector<int> indices;
};

std::vector<Block> stratum_blocks(const GradedModule& g, int t) {
    std::map<int, std::vector<int>> by_weight;
    for (int idx = 0; idx < g.total.dim; ++idx)
        if (g.degree(idx) == t)
            by_weight[g.total.weights[static_cast<std::size_t>(idx)]].push_back(idx);
    std::vector<Block> out;
    out.reserve(by_weight.size());
    for (auto& [w, idxs] : by_weight)
        out.push_back(Block{t, w, std::move(idxs)});
    return out;
}

DegreeInvariants assemble(const GradedModule& g, int t, std::vector<std::vector<SparseVec>> block_kernels) {
    DegreeInvariants out;
    out.t = t;
    for (auto& k : block_kernels)
        for (auto& v : k)
            out.basis.push_back(std::move(v));
    out.parts = decompose_kernel(g, out.basis);
    return out;
}

} // namespace

DegreeInvariants graded_invariants(const GradedModule& g, int t) {
    if (t < 0 || t > g.max_degree)
        throw std::invalid_argument("graded_invariants: degree out of range 0.." + std::to_string(g.max_degree));
    std::vector<std::vector<SparseVec>> kernels;
    for (const auto& block : stratum_blocks(g, t))
        kernels.push_back(block_kernel(g, block.indices));
    return assemble(g, t, std::move(kernels));
}

SocleReport socle(const GradedModule& g, int jobs) {
    SocleReport report;
    report.m = g.total.structure.m();
    report.mode = g.total.structure.mode();
    report.left = g.left.label;
    report.right = g.right.label;

    std::vector<Block> blocks;
    for (int t = 0; t <= g.max_degree; ++t)
        for (auto& b : stratum_blocks(g, t))
            blocks.push_back(std::move(b));

    std::vector<std::vector<SparseVec>> kernels(blocks.size());
    run_indexed(blocks.size(), jobs,
                [&](std::size_t i) { kernels[i] = block_kernel(g, blocks[i].indices); });

    report.degrees.resize(static_cast<std::size_t>(g.max_degree) + 1);
    for (int t = 0; t <= g.max_degree; ++t) {
        std::vector<std::vector<SparseVec>> mine;
        for (std::size_t i = 0; i < blocks.size(); ++i)
            if (blocks[i].t == t)
                mine.push_back(std::move(kernels[i]));
        report.degrees[static_cast<std::size_t>(t)] = assemble(g, t, std::move(mine));
    }
    return report;
}

IrrepMultiset sl2_decompose(const Representation& carrier, const std::vector<SparseVec>& space) {
    for (const auto& v : space) {
        if (v.empty())
            continue;
        const int w = carrier.weights.at(static_cast<std::size_t>(v.begin()->first));
        for (const auto& [idx, val] : v)
            if (carrier.weights.at(static_cast<std::size_t>(idx)) != w)
                throw std::invalid_argument("sl2_decompose: input is not spanned by weight vectors");
    }
    const SparseMatrix& raising = carrier.action(GeneratorId::e());
    std::map<int, std::vector<SparseVec>> by_weight;
    for (const auto& v : space)
        if (!v.empty())
            by_weight[carrier.weights[static_cast<std::size_t>(v.begin()->first)]].push_back(v);

    IrrepMultiset out;
    for (const auto& [mu, vecs] : by_weight) {
        if (mu < 0)
            continue;
        std::map<int, SparseVec> rows_by_ambient;
        for (std::size_t k = 0; k < vecs.size(); ++k)
            for (const auto& [r, v] : raising.apply(vecs[k]))
                rows_by_ambient[r].emplace(static_cast<int>(k), v);
        std::vector<SparseVec> rows;
        rows.reserve(rows_by_ambient.size());
        for (auto& [r, row] : rows_by_ambient)
            rows.push_back(std::move(row));
        const int mult = kernel_of_rows(rows, static_cast<int>(vecs.size())).dim();
        if (mult > 0)
            out[mu] = mult;
    }
    return out;
}

} // namespace unirep

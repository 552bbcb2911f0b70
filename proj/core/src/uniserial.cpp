#include "unirep/uniserial.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

#include "unirep/clebsch.hpp"
#include "unirep/intertwine.hpp"

namespace unirep {

namespace {

[[noreturn]] void reject(const std::string& spec, const std::string& rule) {
    throw std::invalid_argument(spec + ": " + rule);
}

void require_e_link(const std::string& spec, int a, int b, int m) {
    if ((a + b - m) % 2 != 0)
        reject(spec, "a+b = m (mod 2) violated for layers (" + std::to_string(a) + "," + std::to_string(b) + ")");
    if (std::abs(a - b) > m)
        reject(spec, "|a-b| <= m violated for layers (" + std::to_string(a) + "," + std::to_string(b) + ")");
    if (m > a + b)
        reject(spec, "m <= a+b violated for layers (" + std::to_string(a) + "," + std::to_string(b) + ")");
}

} // namespace

ModuleSpec::ModuleSpec(ModuleSpecKind kind, int m, Mode mode) : kind_(std::move(kind)), m_(m), mode_(mode) {
    // normalize FU triples at n=1 to the +/- families
    if (mode_ == Mode::heisenberg && m_ == 1) {
        if (const auto* fu = std::get_if<SpecFU>(&kind_)) {
            if (fu->a0 == fu->a2 && fu->a1 == fu->a0 + 1)
                kind_ = SpecFUplus{fu->a0};
            else if (fu->a0 == fu->a2 && fu->a1 == fu->a0 - 1)
                kind_ = SpecFUminus{fu->a0};
        }
    }
    validate();
}

void ModuleSpec::validate() const {
    const std::string name = render();
    LieStructure probe(m_, mode_); // validates m/mode combination itself
    std::visit(
        [&](const auto& spec) {
            using T = std::decay_t<decltype(spec)>;
            if constexpr (std::is_same_v<T, SpecV>) {
                if (spec.a < 0)
                    reject(name, "a >= 0 violated");
            } else if constexpr (std::is_same_v<T, SpecE>) {
                if (spec.a < 0 || spec.b < 0)
                    reject(name, "a,b >= 0 violated");
                require_e_link(name, spec.a, spec.b, m_);
            } else if constexpr (std::is_same_v<T, SpecZ> || std::is_same_v<T, SpecZdual>) {
                if (spec.alpha < 0)
                    reject(name, "alpha >= 0 violated");
                if (spec.len < 0)
                    reject(name, "length >= 0 violated");
            } else if constexpr (std::is_same_v<T, SpecE3>) {
                if (spec.c < 0 || spec.c >= 2 * m_)
                    reject(name, "0 <= c < 2m violated");
                if ((2 * m_ - spec.c) % 4 != 0)
                    reject(name, "c = 2m (mod 4) violated");
            } else if constexpr (std::is_same_v<T, SpecE4>) {
                if (m_ % 4 != 0)
                    reject(name, "m = 0 (mod 4) violated (family exists only there)");
                if (spec.t == 0)
                    reject(name, "t != 0 violated (the family is parameterized by a non-zero scalar)");
            } else if constexpr (std::is_same_v<T, SpecFUplus>) {
                if (mode_ != Mode::heisenberg || m_ != 1)
                    reject(name, "FU+ requires heisenberg mode with n = 1");
                if (spec.a < 0)
                    reject(name, "a >= 0 violated");
            } else if constexpr (std::is_same_v<T, SpecFUminus>) {
                if (mode_ != Mode::heisenberg || m_ != 1)
                    reject(name, "FU- requires heisenberg mode with n = 1");
                if (spec.a < 1)
                    reject(name, "a >= 1 violated");
            } else if constexpr (std::is_same_v<T, SpecFU>) {
                if (mode_ != Mode::heisenberg)
                    reject(name, "faithful families require heisenberg mode");
                const int a0 = spec.a0, a1 = spec.a1, a2 = spec.a2;
                if (m_ == 1) {
                    reject(name, "no faithful uniserial with this triple at n = 1 (use FU+/FU-)");
                } else if (m_ == 3) {
                    const bool listed = (a0 == 0 && a1 == 3 && a2 == 0) || (a0 == 1 && a1 == 4 && a2 == 1) ||
                                        (a0 == 1 && a1 == 2 && a2 == 1) || (a0 == 4 && a1 == 3 && a2 == 4);
                    if (!listed)
                        reject(name, "triple not among (0,3,0),(1,4,1),(1,2,1),(4,3,4) for n = 2");
                } else {
                    const bool listed = (a0 == 0 && a1 == m_ && a2 == 0) || (a0 == 1 && a1 == m_ + 1 && a2 == 1) ||
                                        (a0 == 1 && a1 == m_ - 1 && a2 == 1);
                    if (!listed)
                        reject(name, "triple not among (0,m,0),(1,m+1,1),(1,m-1,1) for n >= 3");
                }
            }
        },
        kind_);

    // every consecutive layer pair must form a valid E-link
    const auto layers = layer_weights();
    for (std::size_t i = 1; i < layers.size(); ++i)
        require_e_link(name, layers[i - 1], layers[i], m_);
}

std::string ModuleSpec::render() const {
    std::ostringstream out;
    std::visit(
        [&](const auto& spec) {
            using T = std::decay_t<decltype(spec)>;
            if constexpr (std::is_same_v<T, SpecV>)
                out << "V(" << spec.a << ")";
            else if constexpr (std::is_same_v<T, SpecE>)
                out << "E(" << spec.a << "," << spec.b << ")";
            else if constexpr (std::is_same_v<T, SpecZ>)
                out << "Z(" << spec.alpha << "," << spec.len << ")";
            else if constexpr (std::is_same_v<T, SpecZdual>)
                out << "Zd(" << spec.alpha << "," << spec.len << ")";
            else if constexpr (std::is_same_v<T, SpecE3>)
                out << "E3(" << spec.c << ")";
            else if constexpr (std::is_same_v<T, SpecE4>)
                out << "E4(" << to_string(spec.t) << ")";
            else if constexpr (std::is_same_v<T, SpecFUplus>)
                out << "FU+(" << spec.a << ")";
            else if constexpr (std::is_same_v<T, SpecFUminus>)
                out << "FU-(" << spec.a << ")";
            else if constexpr (std::is_same_v<T, SpecFU>)
                out << "FU(" << spec.a0 << "," << spec.a1 << "," << spec.a2 << ")";
        },
        kind_);
    return out.str();
}

std::vector<int> ModuleSpec::layer_weights() const {
    return std::visit(
        [&](const auto& spec) -> std::vector<int> {
            using T = std::decay_t<decltype(spec)>;
            if constexpr (std::is_same_v<T, SpecV>) {
                return {spec.a};
            } else if constexpr (std::is_same_v<T, SpecE>) {
                return {spec.a, spec.b};
            } else if constexpr (std::is_same_v<T, SpecZ>) {
                std::vector<int> out;
                for (int i = 0; i <= spec.len; ++i)
                    out.push_back(spec.alpha + i * m_);
                return out;
            } else if constexpr (std::is_same_v<T, SpecZdual>) {
                std::vector<int> out;
                for (int i = 0; i <= spec.len; ++i)
                    out.push_back(spec.alpha + (spec.len - i) * m_);
                return out;
            } else if constexpr (std::is_same_v<T, SpecE3>) {
                return {0, m_, spec.c};
            } else if constexpr (std::is_same_v<T, SpecE4>) {
                return {0, m_, m_, 0};
            } else if constexpr (std::is_same_v<T, SpecFUplus>) {
                return {spec.a, spec.a + 1, spec.a};
            } else if constexpr (std::is_same_v<T, SpecFUminus>) {
                return {spec.a, spec.a - 1, spec.a};
            } else {
                return {spec.a0, spec.a1, spec.a2};
            }
        },
        kind_);
}

bool ModuleSpec::is_faithful() const {
    return std::holds_alternative<SpecFUplus>(kind_) || std::holds_alternative<SpecFUminus>(kind_) ||
           std::holds_alternative<SpecFU>(kind_);
}

bool ModuleSpec::is_standard_faithful() const {
    if (!is_faithful())
        return false;
    if (const auto* fu = std::get_if<SpecFU>(&kind_))
        return !(fu->a0 == 4 && fu->a1 == 3 && fu->a2 == 4);
    return true;
}

namespace {

struct SpecParser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && text[pos] == ' ')
            ++pos;
    }
    bool consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!consume(c))
            throw std::invalid_argument("module expression: expected '" + std::string(1, c) + "' in '" +
                                        std::string(text) + "'");
    }
    int integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
            ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start)
            throw std::invalid_argument("module expression: expected integer in '" + std::string(text) + "'");
        return std::stoi(std::string(text.substr(start, pos - start)));
    }
    Rational rational() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
            ++pos;
        while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
            ++pos;
        return parse_rational(text.substr(start, pos - start));
    }
    std::string head() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && text[pos] != '(')
            ++pos;
        std::string h(text.substr(start, pos - start));
        while (!h.empty() && h.back() == ' ')
            h.pop_back();
        return h;
    }
    void end() {
        skip_ws();
        if (pos != text.size())
            throw std::invalid_argument("module expression: trailing characters in '" + std::string(text) + "'");
    }
};

} // namespace

ModuleSpec ModuleSpec::parse(std::string_view text, int m, Mode mode) {
    SpecParser p{text};
    const std::string head = p.head();
    p.expect('(');
    ModuleSpecKind kind;
    if (head == "V") {
        kind = SpecV{p.integer()};
    } else if (head == "E") {
        const int a = p.integer();
        p.expect(',');
        kind = SpecE{a, p.integer()};
    } else if (head == "Z") {
        const int a = p.integer();
        p.expect(',');
        kind = SpecZ{a, p.integer()};
    } else if (head == "Zd") {
        const int a = p.integer();
        p.expect(',');
        kind = SpecZdual{a, p.integer()};
    } else if (head == "E3") {
        kind = SpecE3{p.integer()};
    } else if (head == "E4") {
        kind = SpecE4{p.rational()};
    } else if (head == "FU+") {
        kind = SpecFUplus{p.integer()};
    } else if (head == "FU-") {
        kind = SpecFUminus{p.integer()};
    } else if (head == "FU") {
        const int a0 = p.integer();
        p.expect(',');
        const int a1 = p.integer();
        p.expect(',');
        kind = SpecFU{a0, a1, p.integer()};
    } else {
        throw std::invalid_argument("module expression: unknown constructor '" + head + "'");
    }
    p.expect(')');
    p.end();
    return ModuleSpec(std::move(kind), m, mode);
}

namespace {

// Nilradical link from layer `src` down to layer `dst`:
//   e_s v_j^b = (-1)^j CG(a/2,a/2-i; b/2,-b/2+j | m/2,m/2-s) v_i^a
// with i = j + s + (a-b-m)/2, a single summand per (s,j).
void add_nil_link(Representation& rep, int dst, int src, const Scalar& scale) {
    const int a = rep.layers[static_cast<std::size_t>(dst)];
    const int b = rep.layers[static_cast<std::size_t>(src)];
    const int m = rep.structure.m();
    assert((a - b - m) % 2 == 0);
    for (int s = 0; s <= m; ++s) {
        auto& action = rep.actions.at(GeneratorId::nil(s));
        for (int j = 0; j <= b; ++j) {
            const int i = j + s + (a - b - m) / 2;
            if (i < 0 || i > a)
                continue;
            Scalar c = cg_doubled(a, a - 2 * i, b, -b + 2 * j, m, m - 2 * s);
            if (j % 2 != 0)
                c = -c;
            c = c * scale;
            if (!c.is_zero())
                action.add(rep.basis_index(dst, i), rep.basis_index(src, j), c);
        }
    }
}

// Center acting as  z v_j^{a_src} = lambda v_j^{a_dst}  (equal layer weights).
void add_center_link(Representation& rep, int dst, int src, const Scalar& lambda) {
    assert(rep.layers[static_cast<std::size_t>(dst)] == rep.layers[static_cast<std::size_t>(src)]);
    auto& action = rep.actions.at(GeneratorId::z());
    for (int j = 0; j <= rep.layers[static_cast<std::size_t>(dst)]; ++j)
        action.add(rep.basis_index(dst, j), rep.basis_index(src, j), lambda);
}

} // namespace

Representation build(const ModuleSpec& spec) {
    const LieStructure structure(spec.m(), spec.mode());
    Representation rep = make_layered(structure, spec.layer_weights());
    rep.label = spec.render();

    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, SpecV>) {
                // radical acts trivially
            } else if constexpr (std::is_same_v<T, SpecE> || std::is_same_v<T, SpecZ> ||
                                 std::is_same_v<T, SpecZdual> || std::is_same_v<T, SpecE3>) {
                for (int i = 1; i < rep.layer_count(); ++i)
                    add_nil_link(rep, i - 1, i, Scalar::one());
            } else if constexpr (std::is_same_v<T, SpecE4>) {
                for (int i = 1; i < rep.layer_count(); ++i)
                    add_nil_link(rep, i - 1, i, Scalar::one());
                add_nil_link(rep, 1, 3, Scalar(s.t)); // the bent arrow
            } else {
                for (int i = 1; i < rep.layer_count(); ++i)
                    add_nil_link(rep, i - 1, i, Scalar::one());
                const int m = spec.m();
                const auto layers = spec.layer_weights();
                Scalar lambda;
                if constexpr (std::is_same_v<T, SpecFU>) {
                    if (s.a0 == 4 && s.a1 == 3 && s.a2 == 4) {
                        lambda = Scalar(Rational(-4, 5));
                    } else {
                        // negative sign exactly for the a1 = a0 + m triples
                        lambda = Scalar(Rational(2, layers[0] + 1)) * sqrt_rational(Rational(m + 1));
                        if (s.a1 == s.a0 + m)
                            lambda = -lambda;
                    }
                } else {
                    lambda = Scalar(Rational(2, layers[0] + 1)) * sqrt_rational(Rational(m + 1));
                    if (std::is_same_v<T, SpecFUplus>)
                        lambda = -lambda;
                }
                add_center_link(rep, 0, 2, lambda);
            }
        },
        spec.kind());
    return rep;
}

Representation dual_rep(const Representation& rep) {
    Representation out(rep.structure);
    out.layers.assign(rep.layers.rbegin(), rep.layers.rend());
    out.layer_offsets.resize(out.layers.size() + 1, 0);
    for (std::size_t i = 0; i < out.layers.size(); ++i)
        out.layer_offsets[i + 1] = out.layer_offsets[i] + out.layers[i] + 1;
    out.dim = rep.dim;
    out.label = "dual(" + rep.label + ")";

    // Basis vector (new layer i', position k) is sign * (v_{a-k} of the old
    // layer L-1-i')^*, with sign (-1)^(a-k); this is the standard V(a) ~ V(a)*
    // identification applied per layer, so the sl(2) action keeps its
    // weight-vector form.
    Representation::DualPairing pairing;
    pairing.index.resize(static_cast<std::size_t>(rep.dim));
    pairing.sign.resize(static_cast<std::size_t>(rep.dim));
    out.weights.resize(static_cast<std::size_t>(rep.dim));
    const int nlayers = rep.layer_count();
    if (nlayers == 0)
        throw std::invalid_argument("dual_rep requires a layered carrier");
    for (int ip = 0; ip < nlayers; ++ip) {
        const int iold = nlayers - 1 - ip;
        const int a = out.layers[static_cast<std::size_t>(ip)];
        for (int k = 0; k <= a; ++k) {
            const int idx_new = out.layer_offsets[static_cast<std::size_t>(ip)] + k;
            pairing.index[static_cast<std::size_t>(idx_new)] = rep.basis_index(iold, a - k);
            pairing.sign[static_cast<std::size_t>(idx_new)] = ((a - k) % 2 == 0) ? 1 : -1;
            out.weights[static_cast<std::size_t>(idx_new)] = a - 2 * k;
        }
    }

    // dual action (x phi)(v) = -phi(x v), conjugated into the new basis:
    //   M'(x)[i,j] = -sign_i sign_j M(x)[perm(j), perm(i)]
    for (const auto& [gen, mat] : rep.actions) {
        SparseMatrix dual_action(rep.dim, rep.dim);
        std::vector<int> inverse_perm(static_cast<std::size_t>(rep.dim));
        for (int idx = 0; idx < rep.dim; ++idx)
            inverse_perm[static_cast<std::size_t>(pairing.index[static_cast<std::size_t>(idx)])] = idx;
        for (int r = 0; r < rep.dim; ++r) {
            for (const auto& [c, v] : mat.row(r)) {
                const int j = inverse_perm[static_cast<std::size_t>(r)];
                const int i = inverse_perm[static_cast<std::size_t>(c)];
                const int sgn = -pairing.sign[static_cast<std::size_t>(i)] * pairing.sign[static_cast<std::size_t>(j)];
                dual_action.add(i, j, sgn < 0 ? -v : v);
            }
        }
        out.actions.emplace(gen, std::move(dual_action));
    }
    out.dual_pairing = std::move(pairing);
    return out;
}

namespace {

std::vector<std::vector<int>> weight_blocks(const std::vector<int>& weights) {
    std::map<int, std::vector<int>> by_weight;
    for (std::size_t i = 0; i < weights.size(); ++i)
        by_weight[weights[i]].push_back(static_cast<int>(i));
    std::vector<std::vector<int>> out;
    out.reserve(by_weight.size());
    for (auto& [w, idxs] : by_weight)
        out.push_back(std::move(idxs));
    return out;
}

} // namespace

std::vector<std::map<int, int>> socle_series(const Representation& rep) {
    std::vector<GeneratorId> radical;
    for (GeneratorId g : rep.structure.generators())
        if (g.is_radical())
            radical.push_back(g);

    const auto blocks = weight_blocks(rep.weights);
    const SparseMatrix& raising = rep.action(GeneratorId::e());

    std::vector<std::map<int, int>> steps;
    Subspace soc(rep.dim);
    while (soc.dim() < rep.dim) {
        // next term: {v : g v in soc for all radical g}, blockwise per weight
        std::vector<SparseVec> next_basis;
        for (const auto& block : blocks) {
            std::map<std::pair<std::size_t, int>, SparseVec> constraints;
            for (std::size_t gi = 0; gi < radical.size(); ++gi) {
                const SparseMatrix& action = rep.action(radical[gi]);
                for (std::size_t lc = 0; lc < block.size(); ++lc) {
                    SparseVec column;
                    column.emplace(block[lc], Scalar::one());
                    const SparseVec reduced = soc.reduce(action.apply(column));
                    for (const auto& [r, v] : reduced)
                        constraints[{gi, r}].emplace(static_cast<int>(lc), v);
                }
            }
            std::vector<SparseVec> rows;
            rows.reserve(constraints.size());
            for (auto& [key, row] : constraints)
                rows.push_back(std::move(row));
            const Subspace local = kernel_of_rows(rows, static_cast<int>(block.size()));
            for (const auto& kv : local.basis()) {
                SparseVec lifted;
                for (const auto& [lc, v] : kv)
                    lifted.emplace(block[static_cast<std::size_t>(lc)], v);
                next_basis.push_back(std::move(lifted));
            }
        }
        Subspace next = Subspace::from_vectors(rep.dim, std::move(next_basis));
        if (next.dim() <= soc.dim())
            throw std::logic_error("socle series stalled; the actions do not define a module");

        // sl(2)-decompose next/soc: highest weight vectors per weight mu
        std::map<int, std::vector<SparseVec>> next_by_weight;
        std::map<int, int> soc_dim_by_weight;
        for (const auto& v : next.basis())
            next_by_weight[rep.weights[static_cast<std::size_t>(v.begin()->first)]].push_back(v);
        for (const auto& v : soc.basis())
            ++soc_dim_by_weight[rep.weights[static_cast<std::size_t>(v.begin()->first)]];

        std::map<int, int> step;
        for (const auto& [mu, vecs] : next_by_weight) {
            if (mu < 0)
                continue;
            std::vector<SparseVec> columns;
            columns.reserve(vecs.size());
            for (const auto& v : vecs)
                columns.push_back(soc.reduce(raising.apply(v)));
            // kernel of the map (coeffs) -> sum coeff_k * columns[k]
            std::map<int, SparseVec> rows_by_ambient;
            for (std::size_t k = 0; k < columns.size(); ++k)
                for (const auto& [r, v] : columns[k])
                    rows_by_ambient[r].emplace(static_cast<int>(k), v);
            std::vector<SparseVec> rows;
            rows.reserve(rows_by_ambient.size());
            for (auto& [r, row] : rows_by_ambient)
                rows.push_back(std::move(row));
            const int hw = kernel_of_rows(rows, static_cast<int>(vecs.size())).dim() -
                           (soc_dim_by_weight.count(mu) ? soc_dim_by_weight[mu] : 0);
            if (hw > 0)
                step[mu] = hw;
        }
        steps.push_back(std::move(step));
        soc = std::move(next);
    }
    return steps;
}

bool verify_uniserial(const Representation& rep) {
    if (rep.dim == 0)
        return false;
    const auto steps = socle_series(rep);
    for (const auto& step : steps) {
        int total = 0;
        for (const auto& [mu, mult] : step)
            total += mult;
        if (total != 1)
            return false;
    }
    return true;
}

bool is_isomorphic(const Representation& a, const Representation& b) {
    if (a.dim != b.dim || a.structure != b.structure)
        return false;
    const HomReport hom = hom_space(a, b);
    if (hom.dimension == 0)
        return false;
    // search the pencil T1 + lambda T2 (+ ...) for an invertible element;
    // det is a polynomial of degree <= dim in each lambda, so scanning
    // dim+1 values per basis direction decides exactly.
    auto invertible = [&](const SparseMatrix& t) { return rank(t) == a.dim; };
    if (invertible(hom.basis[0]))
        return true;
    for (std::size_t k = 1; k < hom.basis.size(); ++k) {
        if (invertible(hom.basis[k]))
            return true;
        for (int lambda = 1; lambda <= a.dim; ++lambda) {
            if (invertible(hom.basis[0] + hom.basis[k].scaled(Scalar(lambda))))
                return true;
        }
    }
    return false;
}

} // namespace unirep

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "unirep/expr.hpp"
#include "unirep/tensorsocle.hpp"

namespace unirep {

/// Expected-value tables for the regression harness. Each table is an
/// ordered list of predicate cases over integer variables; the first case
/// whose guard holds decides the expected value. Socle-type tables yield an
/// sl(2) multiset (none, a single V(expr), or the Clebsch-Gordan ladder of
/// two weights); dim-type tables yield an integer.
class TheoremTable {
public:
    enum class Form { none, single, ladder };
    struct SocleCase {
        IntExpr when;
        Form form = Form::none;
        IntExpr arg1, arg2;
    };
    struct DimCase {
        IntExpr when;
        IntExpr dim;
    };

    static TheoremTable from_json_text(const std::string& id, const std::string& text);

    const std::string& id() const { return id_; }
    bool is_dim_table() const { return !dim_cases_.empty(); }

    /// Throws std::out_of_range when no case matches (tables must be total
    /// over their enumeration domain).
    IrrepMultiset expected_socle(const ExprEnv& env) const;
    long long expected_dim(const ExprEnv& env) const;

    /// Self-test support: shifts the first non-empty expected value so the
    /// verifier must report a discrepancy on any matching point.
    void perturb();

private:
    std::string id_;
    std::vector<SocleCase> socle_cases_;
    std::vector<DimCase> dim_cases_;
};

class TableSet {
public:
    /// Tables compiled into the library from core/data/*.json.
    static TableSet embedded();
    /// Loads <id>.json files from a directory (same ids as embedded()).
    static TableSet from_directory(const std::filesystem::path& dir);

    const TheoremTable& at(const std::string& id) const;
    TheoremTable& at(const std::string& id);
    std::vector<std::string> ids() const;

private:
    std::map<std::string, TheoremTable> tables_;
};

} // namespace unirep

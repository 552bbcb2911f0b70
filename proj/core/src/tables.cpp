#include "unirep/tables.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace unirep {

namespace detail {
const std::map<std::string, std::string>& embedded_table_sources();
}

namespace {

TheoremTable::Form parse_socle_value(const std::string& text, IntExpr& arg1, IntExpr& arg2) {
    if (text == "none")
        return TheoremTable::Form::none;
    if (text.rfind("V(", 0) == 0 && text.back() == ')') {
        arg1 = IntExpr::parse(text.substr(2, text.size() - 3));
        return TheoremTable::Form::single;
    }
    if (text.rfind("ladder(", 0) == 0 && text.back() == ')') {
        const std::string inner = text.substr(7, text.size() - 8);
        // split on the top-level comma
        int depth = 0;
        for (std::size_t i = 0; i < inner.size(); ++i) {
            if (inner[i] == '(')
                ++depth;
            else if (inner[i] == ')')
                --depth;
            else if (inner[i] == ',' && depth == 0) {
                arg1 = IntExpr::parse(inner.substr(0, i));
                arg2 = IntExpr::parse(inner.substr(i + 1));
                return TheoremTable::Form::ladder;
            }
        }
        throw std::invalid_argument("ladder() needs two arguments: " + text);
    }
    throw std::invalid_argument("unknown socle value form: " + text);
}

} // namespace

TheoremTable TheoremTable::from_json_text(const std::string& id, const std::string& text) {
    const auto doc = nlohmann::json::parse(text);
    TheoremTable table;
    table.id_ = doc.value("id", id);
    if (table.id_ != id)
        throw std::invalid_argument("table id mismatch: expected " + id + ", file says " + table.id_);
    const std::string kind = doc.at("kind").get<std::string>();
    for (const auto& item : doc.at("cases")) {
        if (kind == "socle") {
            SocleCase c;
            c.when = IntExpr::parse(item.at("when").get<std::string>());
            c.form = parse_socle_value(item.at("socle").get<std::string>(), c.arg1, c.arg2);
            table.socle_cases_.push_back(std::move(c));
        } else if (kind == "dim") {
            DimCase c;
            c.when = IntExpr::parse(item.at("when").get<std::string>());
            c.dim = IntExpr::parse(item.at("dim").get<std::string>());
            table.dim_cases_.push_back(std::move(c));
        } else {
            throw std::invalid_argument("unknown table kind: " + kind);
        }
    }
    if (table.socle_cases_.empty() && table.dim_cases_.empty())
        throw std::invalid_argument("table " + id + " has no cases");
    return table;
}

IrrepMultiset TheoremTable::expected_socle(const ExprEnv& env) const {
    for (const auto& c : socle_cases_) {
        if (!c.when.truthy(env))
            continue;
        IrrepMultiset out;
        switch (c.form) {
        case Form::none:
            return out;
        case Form::single: {
            const long long mu = c.arg1.eval(env);
            if (mu < 0)
                throw std::domain_error("table " + id_ + " produced negative weight for case '" +
                                        c.when.source() + "'");
            out[static_cast<int>(mu)] = 1;
            return out;
        }
        case Form::ladder: {
            const long long x = c.arg1.eval(env), y = c.arg2.eval(env);
            for (long long k = 0; k <= std::min(x, y); ++k)
                out[static_cast<int>(x + y - 2 * k)] = 1;
            return out;
        }
        }
    }
    throw std::out_of_range("table " + id_ + " has no case matching the point");
}

long long TheoremTable::expected_dim(const ExprEnv& env) const {
    for (const auto& c : dim_cases_)
        if (c.when.truthy(env))
            return c.dim.eval(env);
    throw std::out_of_range("table " + id_ + " has no case matching the point");
}

void TheoremTable::perturb() {
    for (auto& c : socle_cases_) {
        if (c.form == Form::single) {
            c.arg1 = IntExpr::parse("(" + c.arg1.source() + ") + 2");
            return;
        }
    }
    for (auto& c : dim_cases_) {
        c.dim = IntExpr::parse("(" + c.dim.source() + ") + 1");
        return;
    }
    throw std::logic_error("table " + id_ + " has nothing to perturb");
}

TableSet TableSet::embedded() {
    TableSet out;
    for (const auto& [id, text] : detail::embedded_table_sources())
        out.tables_.emplace(id, TheoremTable::from_json_text(id, text));
    return out;
}

TableSet TableSet::from_directory(const std::filesystem::path& dir) {
    TableSet out;
    for (const auto& [id, unused] : detail::embedded_table_sources()) {
        (void)unused;
        const auto path = dir / (id + ".json");
        std::ifstream in(path);
        if (!in)
            throw std::runtime_error("cannot open table file " + path.string());
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        out.tables_.emplace(id, TheoremTable::from_json_text(id, text));
    }
    return out;
}

const TheoremTable& TableSet::at(const std::string& id) const {
    auto it = tables_.find(id);
    if (it == tables_.end())
        throw std::out_of_range("no expected-value table with id " + id);
    return it->second;
}

TheoremTable& TableSet::at(const std::string& id) {
    auto it = tables_.find(id);
    if (it == tables_.end())
        throw std::out_of_range("no expected-value table with id " + id);
    return it->second;
}

std::vector<std::string> TableSet::ids() const {
    std::vector<std::string> out;
    for (const auto& [id, t] : tables_)
        out.push_back(id);
    return out;
}

} // namespace unirep

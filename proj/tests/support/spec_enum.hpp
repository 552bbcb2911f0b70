#pragma once

#include <vector>

#include "unirep/uniserial.hpp"

namespace unirep::testsupport {

/// Every valid constructor spec with all layer weights <= max_weight and
/// type-Z length <= max_len, over abelian m = 1..max_m and heisenberg
/// m = 1,3,..,max_m.
inline std::vector<ModuleSpec> all_specs(int max_m, int max_weight, int max_len) {
    std::vector<ModuleSpec> out;
    auto try_push = [&](ModuleSpecKind kind, int m, Mode mode) {
        try {
            ModuleSpec spec(std::move(kind), m, mode);
            for (int w : spec.layer_weights())
                if (w > max_weight)
                    return;
            out.push_back(std::move(spec));
        } catch (const std::invalid_argument&) {
            // outside the classification; skip
        }
    };
    for (int m = 1; m <= max_m; ++m) {
        for (Mode mode : {Mode::abelian, Mode::heisenberg}) {
            if (mode == Mode::heisenberg && m % 2 == 0)
                continue;
            for (int a = 0; a <= max_weight; ++a)
                try_push(SpecV{a}, m, mode);
            for (int a = 0; a <= max_weight; ++a)
                for (int b = 0; b <= max_weight; ++b)
                    try_push(SpecE{a, b}, m, mode);
            for (int alpha = 0; alpha <= max_weight; ++alpha)
                for (int len = 1; len <= max_len; ++len) {
                    try_push(SpecZ{alpha, len}, m, mode);
                    try_push(SpecZdual{alpha, len}, m, mode);
                }
            for (int c = 0; c < 2 * m; ++c)
                try_push(SpecE3{c}, m, mode);
            if (mode == Mode::abelian) {
                try_push(SpecE4{Rational(1)}, m, mode);
                try_push(SpecE4{Rational(-2, 3)}, m, mode);
            }
            if (mode == Mode::heisenberg) {
                if (m == 1) {
                    for (int a = 0; a <= max_weight; ++a)
                        try_push(SpecFUplus{a}, m, mode);
                    for (int a = 1; a <= max_weight; ++a)
                        try_push(SpecFUminus{a}, m, mode);
                } else {
                    try_push(SpecFU{0, m, 0}, m, mode);
                    try_push(SpecFU{1, m + 1, 1}, m, mode);
                    try_push(SpecFU{1, m - 1, 1}, m, mode);
                    if (m == 3)
                        try_push(SpecFU{4, 3, 4}, m, mode);
                }
            }
        }
    }
    return out;
}

} // namespace unirep::testsupport

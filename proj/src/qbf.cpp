#include "ssp/qbf.hpp"

#include <algorithm>
#include <cstdint>

#include "ssp/errors.hpp"

namespace ssp {

namespace {

bool literal_less(Int a, Int b) {
    Int va = a < 0 ? -a : a;
    Int vb = b < 0 ? -b : b;
    if (va != vb) return va < vb;
    return a > b;  // positive literal before negative of the same variable
}

}  // namespace

std::vector<std::string> validate(const QuantifiedFormula& f) {
    std::vector<std::string> out;
    if (f.num_x < 0 || f.num_y < 0 || f.num_z < 0)
        out.push_back("negative block size");
    if (f.shape == QbfShape::ExistsForallDnf && f.num_z != 0)
        out.push_back("DNF shape admits no Z block");
    Int n = f.num_vars();
    for (const auto& row : f.rows) {
        for (Int lit : row) {
            Int v = lit < 0 ? -lit : lit;
            if (v < 1 || v > n) {
                out.push_back("literal outside declared variables: " +
                              std::to_string(lit));
            }
        }
    }
    return out;
}

void require_valid(const QuantifiedFormula& f) {
    auto diags = validate(f);
    if (diags.empty()) return;
    std::string msg = "invalid formula:";
    for (const auto& d : diags) msg += " " + d + ";";
    throw ValidationError(msg);
}

QuantifiedFormula make_qbf(QbfShape shape, Int num_x, Int num_y, Int num_z,
                           std::vector<std::vector<Int>> rows) {
    for (auto& row : rows) {
        std::sort(row.begin(), row.end(), literal_less);
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    QuantifiedFormula f{shape, num_x, num_y, num_z, std::move(rows)};
    require_valid(f);
    return f;
}

namespace {

// Assignment as a bitmask over variables 1..n; bit v-1 set means true.
bool literal_holds(Int lit, std::uint32_t assignment) {
    Int v = lit < 0 ? -lit : lit;
    bool value = (assignment >> (v - 1)) & 1u;
    return lit > 0 ? value : !value;
}

bool matrix_holds(const QuantifiedFormula& f, std::uint32_t assignment) {
    if (f.shape == QbfShape::ExistsForallDnf) {
        for (const auto& term : f.rows) {
            bool all = true;
            for (Int lit : term)
                if (!literal_holds(lit, assignment)) {
                    all = false;
                    break;
                }
            if (all) return true;
        }
        return false;
    }
    for (const auto& clause : f.rows) {
        bool any = false;
        for (Int lit : clause)
            if (literal_holds(lit, assignment)) {
                any = true;
                break;
            }
        if (!any) return false;
    }
    return true;
}

}  // namespace

bool eval_qbf(const QuantifiedFormula& f) {
    require_valid(f);
    if (f.num_vars() > kQbfVarCap)
        throw CapExceeded("formula has " + std::to_string(f.num_vars()) +
                          " variables; evaluation cap is " +
                          std::to_string(kQbfVarCap));
    const Int nx = f.num_x, ny = f.num_y, nz = f.num_z;
    const std::uint32_t cx = 1u << nx, cy = 1u << ny, cz = 1u << nz;
    for (std::uint32_t ax = 0; ax < cx; ++ax) {
        bool all_y = true;
        for (std::uint32_t ay = 0; ay < cy && all_y; ++ay) {
            bool some_z = false;
            for (std::uint32_t az = 0; az < cz && !some_z; ++az) {
                std::uint32_t assignment = ax | (ay << nx) | (az << (nx + ny));
                if (matrix_holds(f, assignment)) some_z = true;
            }
            if (!some_z) all_y = false;
        }
        if (all_y) return true;
    }
    return false;
}

}  // namespace ssp

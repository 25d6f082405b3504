#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "states.hpp"

namespace entconc {

// Wire format for a state:
// {"basis": ["VV","VH","HV","HH"], "re": [[..4x4..]], "im": [[..4x4..]]}
// The basis array is written on output and checked on input; unknown extra
// keys are ignored so annotated files round-trip.
inline nlohmann::json state_to_json(const DensityMatrix& rho) {
    nlohmann::json j;
    j["basis"] = basis_labels;
    std::vector<std::vector<double>> re(4, std::vector<double>(4));
    std::vector<std::vector<double>> im(4, std::vector<double>(4));
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            re[r][c] = rho(r, c).real();
            im[r][c] = rho(r, c).imag();
        }
    j["re"] = re;
    j["im"] = im;
    return j;
}

inline DensityMatrix state_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ValidationError("state json: expected an object");
    if (j.contains("basis")) {
        const auto& b = j.at("basis");
        if (!b.is_array() || b.size() != 4) throw ValidationError("state json: basis must list 4 labels");
        for (int i = 0; i < 4; ++i)
            if (b[i].get<std::string>() != basis_labels[i])
                throw ValidationError("state json: basis order must be VV, VH, HV, HH");
    }
    if (!j.contains("re") || !j.contains("im"))
        throw ValidationError("state json: missing re or im matrix");
    ComplexMatrix m(4);
    for (const char* key : {"re", "im"}) {
        const auto& rows = j.at(key);
        if (!rows.is_array() || rows.size() != 4)
            throw ValidationError(std::string("state json: ") + key + " must be a 4x4 array");
        for (int r = 0; r < 4; ++r) {
            const auto& row = rows[r];
            if (!row.is_array() || row.size() != 4)
                throw ValidationError(std::string("state json: ") + key + " must be a 4x4 array");
            for (int c = 0; c < 4; ++c) {
                const double v = row[c].get<double>();
                if (key[0] == 'r')
                    m(r, c) += Complex(v, 0.0);
                else
                    m(r, c) += Complex(0.0, v);
            }
        }
    }
    return DensityMatrix::from_matrix(m);
}

}

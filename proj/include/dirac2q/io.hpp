// io.hpp
// JSON formats shared by the library and the CLI: matrices as
// {"rows": [[[re,im], ...], ...]}, coefficient maps keyed by basis label,
// density parameters, and the derived action table.

#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "dirac2q/bell.hpp"
#include "dirac2q/density.hpp"
#include "dirac2q/dirac_basis.hpp"
#include "dirac2q/linalg.hpp"

namespace dirac2q {

using json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FileNotFoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline json complex_to_json(const cplx& v) { return json::array({v.real(), v.imag()}); }

inline cplx complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ParseError("expected a [re, im] pair");
    }
    const cplx v(j[0].get<double>(), j[1].get<double>());
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw ParseError("non-finite matrix entry");
    }
    return v;
}

template <std::size_t N>
json matrix_to_json(const Matrix<N>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < N; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < N; ++j) {
            row.push_back(complex_to_json(m(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return json{{"rows", std::move(rows)}};
}

template <std::size_t N>
Matrix<N> matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows")) {
        throw ParseError("expected an object with a \"rows\" field");
    }
    const json& rows = j["rows"];
    if (!rows.is_array() || rows.size() != N) {
        throw ParseError("expected " + std::to_string(N) + " rows");
    }
    Matrix<N> m;
    for (std::size_t i = 0; i < N; ++i) {
        if (!rows[i].is_array() || rows[i].size() != N) {
            throw ParseError("expected " + std::to_string(N) + " entries per row");
        }
        for (std::size_t jj = 0; jj < N; ++jj) {
            m(i, jj) = complex_from_json(rows[i][jj]);
        }
    }
    return m;
}

template <std::size_t N>
Matrix<N> load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) {
        throw FileNotFoundError("cannot open " + path);
    }
    json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return matrix_from_json<N>(j);
}

inline Mat4 load_matrix4(const std::string& path) { return load_matrix<4>(path); }

inline json coeffs_to_json(const DiracCoefficients& c) {
    json j = json::object();
    for (DiracLabel label : kAllDiracLabels) {
        j[std::string(dirac_label_name(label))] = complex_to_json(c[label]);
    }
    return j;
}

inline DiracCoefficients coeffs_from_json(const json& j) {
    if (!j.is_object()) {
        throw ParseError("expected a coefficient object");
    }
    DiracCoefficients c;
    for (DiracLabel label : kAllDiracLabels) {
        const std::string key(dirac_label_name(label));
        if (j.contains(key)) {
            c[label] = complex_from_json(j[key]);
        }
    }
    return c;
}

inline json params_to_json(const DensityParams& p) {
    return json{
        {"sA", {p.bloch_a.s1, p.bloch_a.s2, p.bloch_a.s3}},
        {"sB", {p.bloch_b.s1, p.bloch_b.s2, p.bloch_b.s3}},
        {"C",
         {{p.corr[0][0], p.corr[0][1], p.corr[0][2]},
          {p.corr[1][0], p.corr[1][1], p.corr[1][2]},
          {p.corr[2][0], p.corr[2][1], p.corr[2][2]}}},
    };
}

inline DensityParams params_from_json(const json& j) {
    auto triple = [](const json& arr, const char* what) {
        if (!arr.is_array() || arr.size() != 3) {
            throw ParseError(std::string("expected 3 components in ") + what);
        }
        return BlochVector{arr[0].get<double>(), arr[1].get<double>(), arr[2].get<double>()};
    };
    if (!j.is_object() || !j.contains("sA") || !j.contains("sB") || !j.contains("C")) {
        throw ParseError("expected {sA, sB, C}");
    }
    DensityParams p;
    p.bloch_a = triple(j["sA"], "sA");
    p.bloch_b = triple(j["sB"], "sB");
    const json& c = j["C"];
    if (!c.is_array() || c.size() != 3) {
        throw ParseError("expected a 3x3 C grid");
    }
    for (std::size_t i = 0; i < 3; ++i) {
        if (!c[i].is_array() || c[i].size() != 3) {
            throw ParseError("expected a 3x3 C grid");
        }
        for (std::size_t jj = 0; jj < 3; ++jj) {
            p.corr[i][jj] = c[i][jj].get<double>();
        }
    }
    return p;
}

inline json phase_action_to_json(const std::string& op, BellLabel source,
                                 const PhaseAction& action) {
    json j{{"operator", op}, {"source", std::string(bell_label_name(source))}};
    if (action.mixes()) {
        j["target"] = "MIXES";
        j["phase"] = nullptr;
    } else {
        j["target"] = std::string(bell_label_name(*action.target));
        j["phase"] = complex_to_json(action.phase);
    }
    return j;
}

// Flat record array, one record per (operator, source) pair; Dirac rows
// first, symmetry rows after.
inline json table_to_json(const SymmetryTable& table) {
    json records = json::array();
    auto emit = [&records](const std::vector<ActionTableRow>& rows) {
        for (const auto& row : rows) {
            for (BellLabel b : kAllBellLabels) {
                records.push_back(
                    phase_action_to_json(row.op, b, row.actions[static_cast<std::size_t>(b)]));
            }
        }
    };
    emit(table.dirac_rows);
    emit(table.symmetry_rows);
    return records;
}

// Text-mode number formatting: 12 significant digits, negative zero dropped.
inline std::string format_real(double v) {
    if (v == 0.0) {
        v = 0.0;
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

inline std::string format_complex(const cplx& v) {
    if (v.imag() == 0.0) {
        return format_real(v.real());
    }
    if (v.real() == 0.0) {
        return format_real(v.imag()) + "i";
    }
    const std::string sign = v.imag() < 0 ? "-" : "+";
    return format_real(v.real()) + sign + format_real(std::abs(v.imag())) + "i";
}

// Compact rendering for the phases that occur in the action table.
inline std::string format_phase(const cplx& phase, Tolerance tol = {}) {
    if (std::abs(phase - cplx(1.0)) <= tol.eps) return "+";
    if (std::abs(phase + cplx(1.0)) <= tol.eps) return "-";
    if (std::abs(phase - cplx(0.0, 1.0)) <= tol.eps) return "+i";
    if (std::abs(phase + cplx(0.0, 1.0)) <= tol.eps) return "-i";
    return "(" + format_complex(phase) + ")";
}

template <std::size_t N>
std::string format_matrix(const Matrix<N>& m) {
    std::ostringstream out;
    for (std::size_t i = 0; i < N; ++i) {
        out << "[ ";
        for (std::size_t j = 0; j < N; ++j) {
            out << format_complex(m(i, j));
            if (j + 1 < N) {
                out << "  ";
            }
        }
        out << " ]\n";
    }
    return out.str();
}

}  // namespace dirac2q

#pragma once

#include <json.hpp>

#include "folia/clifford.hpp"
#include "folia/homsolver.hpp"
#include "folia/jordan.hpp"
#include "folia/models.hpp"
#include "folia/symmetry.hpp"

namespace folia {

/// nlohmann::json with lexicographically ordered keys: identical data
/// serializes to identical bytes, which the determinism contract relies on.
using Json = nlohmann::json;

/// Matrices are arrays of arrays of "p/q" strings (exact); readers also
/// accept plain JSON numbers, converted exactly.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json vector_to_json(const VecR& v);
VecR vector_from_json(const Json& j);

/// {"vars": n, "terms": [{"exp": [e1..en], "coef": "p/q"}]}
Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

/// {"m": m, "l": l, "P": [matrix, ...]}
Json clifford_to_json(const CliffordSystem& c);
CliffordSystem clifford_from_json(const Json& j);

/// {"dim": n, "generators": [...], "provenance": tag}; the oracle is
/// reconstructed from provenance, never serialized.
Json model_to_json(const FoliationModel& m);

Json factors_to_json(const std::vector<SimpleFactor>& factors);
Json fft_to_json(const std::vector<FftRow>& rows);
Json moduli_to_json(const std::vector<ModuliFactorReport>& reports);

/// Equations mirror the polynomial format over variables phi_i_j
/// (row-major, 1-based in the names).
Json equations_to_json(const HomVariety& hv);

}  // namespace folia

// JSON and CSV serialization. All floating-point text is written with 17
// significant digits so identical inputs reproduce identical bytes.
#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "qfb/evolve.hpp"
#include "qfb/generator.hpp"
#include "qfb/states.hpp"
#include "qfb/stochastic.hpp"

namespace qfb {

using Json = nlohmann::json;

/// Density matrix as a flat array of 16 [re, im] pairs, row-major.
Json to_json(const DensityMatrix& rho);
/// Parses and validates.
DensityMatrix density_from_json(const Json& j);

/// X-state as six fields {a, b, c, d, z: [re, im], w: [re, im]}.
Json to_json(const XState& x);
XState xstate_from_json(const Json& j);

/// Kossakowski matrix as a flat array of 36 [re, im] pairs, row-major.
Json to_json(const KossakowskiMatrix& k);
KossakowskiMatrix kossakowski_from_json(const Json& j);

/// Plain 4x4 complex matrix (e.g. a Hamiltonian), 16 pairs row-major.
Json matrix_to_json(const Mat4& m);
Mat4 matrix_from_json(const Json& j);

/// %.17g rendering, round-trip exact for doubles.
std::string format_g17(double v);

/// FNV-1a 64-bit hash.
std::uint64_t fnv1a64(std::string_view s);

/// 16 hex digits over the canonical (sorted-key) dump of a config object.
std::string config_hash(const Json& config);

/// CSV with columns t, re/im of the 16 state entries row-major,
/// concurrence, tau. Two leading comment lines carry the config hash and
/// the full canonical config echo.
std::string trajectory_csv(const Trajectory& tr, const Json& config);

/// CSV with columns t, photocurrent increment.
std::string photocurrent_csv(const ConditionedRecord& rec,
                             const Json& config);

struct SurfaceRow {
  double a = 0, f = 0, tau = 0, d1 = 0, d2 = 0, c = 0;
};

/// CSV with columns a, f, tau, D1, D2, C.
std::string surface_csv(const std::vector<SurfaceRow>& rows,
                        const Json& config);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

/// Rejects keys outside required + optional ("unknown_field") and missing
/// required keys ("missing_field"). `where` names the object in messages.
void require_fields(const Json& j,
                    std::initializer_list<const char*> required,
                    std::initializer_list<const char*> optional,
                    const char* where);

}  // namespace qfb

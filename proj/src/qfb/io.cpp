#include "qfb/io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace qfb {

namespace {

Json pair_of(cd z) { return Json::array({z.real(), z.imag()}); }

cd pair_from(const Json& j, const char* where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    throw Error("bad_value",
                strfmt("%s: expected a [re, im] pair", where));
  }
  return cd(j[0].get<double>(), j[1].get<double>());
}

double number_from(const Json& j, const char* where) {
  if (!j.is_number()) {
    throw Error("bad_value", strfmt("%s: expected a number", where));
  }
  return j.get<double>();
}

Json flat_pairs(const Eigen::Ref<const Eigen::MatrixXcd>& m) {
  Json arr = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      arr.push_back(pair_of(m(i, j)));
    }
  }
  return arr;
}

void fill_from_pairs(const Json& j, Eigen::Ref<Eigen::MatrixXcd> m,
                     const char* where) {
  const auto n = static_cast<std::size_t>(m.rows() * m.cols());
  if (!j.is_array() || j.size() != n) {
    throw Error("bad_value",
                strfmt("%s: expected %zu [re, im] pairs", where, n));
  }
  std::size_t k = 0;
  for (int i = 0; i < m.rows(); ++i) {
    for (int c = 0; c < m.cols(); ++c) {
      m(i, c) = pair_from(j[k++], where);
    }
  }
}

}  // namespace

Json to_json(const DensityMatrix& rho) { return flat_pairs(rho.m); }

DensityMatrix density_from_json(const Json& j) {
  Eigen::MatrixXcd m(4, 4);
  fill_from_pairs(j, m, "density matrix");
  return validate(Mat4(m));
}

Json to_json(const XState& x) {
  return Json{{"a", x.a}, {"b", x.b},        {"c", x.c},
              {"d", x.d}, {"z", pair_of(x.z)}, {"w", pair_of(x.w)}};
}

XState xstate_from_json(const Json& j) {
  require_fields(j, {"a", "b", "c", "d", "z", "w"}, {}, "x-state");
  XState x;
  x.a = number_from(j.at("a"), "x-state a");
  x.b = number_from(j.at("b"), "x-state b");
  x.c = number_from(j.at("c"), "x-state c");
  x.d = number_from(j.at("d"), "x-state d");
  x.z = pair_from(j.at("z"), "x-state z");
  x.w = pair_from(j.at("w"), "x-state w");
  return x;
}

Json to_json(const KossakowskiMatrix& k) { return flat_pairs(k.entries()); }

KossakowskiMatrix kossakowski_from_json(const Json& j) {
  Eigen::MatrixXcd m(6, 6);
  fill_from_pairs(j, m, "kossakowski matrix");
  return KossakowskiMatrix(Mat6(m));
}

Json matrix_to_json(const Mat4& m) { return flat_pairs(m); }

Mat4 matrix_from_json(const Json& j) {
  Eigen::MatrixXcd m(4, 4);
  fill_from_pairs(j, m, "matrix");
  return Mat4(m);
}

std::string format_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string config_hash(const Json& config) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a64(config.dump())));
  return buf;
}

namespace {

void csv_preamble(std::ostringstream& out, const Json& config) {
  out << "# config_hash=" << config_hash(config) << "\n";
  out << "# config=" << config.dump() << "\n";
}

}  // namespace

std::string trajectory_csv(const Trajectory& tr, const Json& config) {
  std::ostringstream out;
  csv_preamble(out, config);
  out << "t";
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      out << ",re_" << i << j << ",im_" << i << j;
    }
  }
  out << ",concurrence,tau\n";
  for (std::size_t k = 0; k < tr.times.size(); ++k) {
    out << format_g17(tr.times[k]);
    const Mat4& m = tr.states[k].m;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        out << ',' << format_g17(m(i, j).real()) << ','
            << format_g17(m(i, j).imag());
      }
    }
    out << ',' << format_g17(tr.concurrences[k]) << ','
        << format_g17(tr.tau[k]) << "\n";
  }
  return out.str();
}

std::string photocurrent_csv(const ConditionedRecord& rec,
                             const Json& config) {
  std::ostringstream out;
  csv_preamble(out, config);
  out << "t,photocurrent\n";
  for (std::size_t k = 0; k < rec.photocurrent.size(); ++k) {
    out << format_g17(rec.times[k]) << ','
        << format_g17(rec.photocurrent[k]) << "\n";
  }
  return out.str();
}

std::string surface_csv(const std::vector<SurfaceRow>& rows,
                        const Json& config) {
  std::ostringstream out;
  csv_preamble(out, config);
  out << "a,f,tau,D1,D2,C\n";
  for (const auto& r : rows) {
    out << format_g17(r.a) << ',' << format_g17(r.f) << ','
        << format_g17(r.tau) << ',' << format_g17(r.d1) << ','
        << format_g17(r.d2) << ',' << format_g17(r.c) << "\n";
  }
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("io_error", strfmt("cannot open '%s' for writing",
                                   path.c_str()));
  }
  out << content;
  if (!out) {
    throw Error("io_error", strfmt("write to '%s' failed", path.c_str()));
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("io_error", strfmt("cannot open '%s' for reading",
                                   path.c_str()));
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void require_fields(const Json& j,
                    std::initializer_list<const char*> required,
                    std::initializer_list<const char*> optional,
                    const char* where) {
  if (!j.is_object()) {
    throw Error("bad_value", strfmt("%s: expected a JSON object", where));
  }
  std::set<std::string> allowed;
  for (const char* k : required) allowed.insert(k);
  for (const char* k : optional) allowed.insert(k);
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (allowed.find(it.key()) == allowed.end()) {
      throw Error("unknown_field", strfmt("%s: unknown field '%s'", where,
                                          it.key().c_str()));
    }
  }
  for (const char* k : required) {
    if (!j.contains(k)) {
      throw Error("missing_field",
                  strfmt("%s: missing required field '%s'", where, k));
    }
  }
}

}  // namespace qfb

#include "vfs/family_io.hpp"

#include <fstream>
#include <sstream>

namespace vfs {

nlohmann::ordered_json family_to_json(const FieldFamily& family) {
  nlohmann::ordered_json out;
  out["space_dim"] = family.dim;
  out["claimed_field"] = std::string(to_string(family.claimed_field));
  auto fields = nlohmann::ordered_json::array();
  for (const auto& f : family.members) {
    auto rows = nlohmann::ordered_json::array();
    for (Eigen::Index r = 0; r < f.matrix.rows(); ++r) {
      auto row = nlohmann::ordered_json::array();
      for (Eigen::Index c = 0; c < f.matrix.cols(); ++c) row.push_back(format_rational(f.matrix(r, c)));
      rows.push_back(std::move(row));
    }
    nlohmann::ordered_json entry;
    entry["name"] = f.name;
    entry["matrix"] = std::move(rows);
    fields.push_back(std::move(entry));
  }
  out["fields"] = std::move(fields);
  return out;
}

FieldFamily family_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw DomainError("family file: top level must be an object");
  if (!j.contains("space_dim") || !j["space_dim"].is_number_integer() || j["space_dim"].get<long long>() < 1) {
    throw DomainError("family file: space_dim must be a positive integer");
  }
  if (!j.contains("claimed_field") || !j["claimed_field"].is_string()) {
    throw DomainError("family file: claimed_field must be \"R\", \"C\" or \"H\"");
  }
  const auto field = parse_field(j["claimed_field"].get<std::string>());
  if (!field) throw DomainError("family file: claimed_field must be \"R\", \"C\" or \"H\"");
  if (!j.contains("fields") || !j["fields"].is_array() || j["fields"].empty()) {
    throw DomainError("family file: fields must be a nonempty array");
  }

  FieldFamily family{static_cast<Eigen::Index>(j["space_dim"].get<long long>()), *field, {}};
  const Eigen::Index n = family.dim;
  for (const auto& entry : j["fields"]) {
    const std::string name = entry.contains("name") && entry["name"].is_string()
                                 ? entry["name"].get<std::string>()
                                 : "field" + std::to_string(family.members.size() + 1);
    if (!entry.contains("matrix") || !entry["matrix"].is_array() ||
        static_cast<Eigen::Index>(entry["matrix"].size()) != n) {
      throw DomainError("family file: " + name + " needs " + std::to_string(n) + " matrix rows");
    }
    RealMatrix m(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
      const auto& row = entry["matrix"][static_cast<std::size_t>(r)];
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
        throw DomainError("family file: " + name + " row " + std::to_string(r) + " must have " +
                          std::to_string(n) + " entries");
      }
      for (Eigen::Index c = 0; c < n; ++c) {
        const auto& cell = row[static_cast<std::size_t>(c)];
        if (cell.is_string()) {
          m(r, c) = parse_rational(cell.get<std::string>());
        } else if (cell.is_number_integer()) {
          m(r, c) = Rational(cell.get<long long>());
        } else {
          throw DomainError("family file: " + name + " entry (" + std::to_string(r) + ", " + std::to_string(c) +
                            ") must be a \"p/q\" string");
        }
      }
    }
    family.members.push_back(LinearField{name, std::move(m)});
  }
  return family;
}

std::string format_family(const FieldFamily& family) { return family_to_json(family).dump(2) + "\n"; }

FieldFamily parse_family(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("family file: ") + e.what());
  }
  return family_from_json(j);
}

FieldFamily read_family(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_family(buf.str());
}

void write_family(const FieldFamily& family, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path.string());
  out << format_family(family);
}

}  // namespace vfs

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "classent/matrix_json.hpp"
#include "classent/omega.hpp"

namespace classent::omega {

namespace {

using nlohmann::json;

json strings(const std::vector<BitString>& v) {
  json arr = json::array();
  for (const auto& b : v) arr.push_back(b.str());
  return arr;
}

std::vector<BitString> parse_strings(const json& j, const char* key) {
  const auto& arr = j.at(key);
  if (!arr.is_array()) throw std::invalid_argument(std::string("checkpoint: '") + key + "' must be an array");
  std::vector<BitString> out;
  out.reserve(arr.size());
  for (const auto& s : arr) out.push_back(BitString::parse(s.get<std::string>()));
  return out;
}

}  // namespace

json result_to_json(const OmegaResult& r) {
  json j;
  j["format_version"] = kCheckpointFormatVersion;
  j["n"] = r.n;
  j["t"] = r.t;
  j["omega"] = tensor::dyadic_to_json(r.omega);
  j["omega_text"] = r.omega.str();
  j["census"] = strings(r.census);
  j["census_size"] = r.census.size();
  j["timeout_count"] = r.timeout_count;
  j["needs_more_count"] = r.needs_more_count;
  return j;
}

json checkpoint_to_json(const EnumerationCheckpoint& cp) {
  json j;
  j["format_version"] = kCheckpointFormatVersion;
  j["n"] = cp.n;
  j["t"] = cp.t;
  j["frontier"] = strings(cp.frontier);
  j["omega"] = tensor::dyadic_to_json(cp.omega);
  j["census"] = strings(cp.census);
  j["timeout_count"] = cp.timeout_count;
  j["needs_more_count"] = cp.needs_more_count;
  return j;
}

EnumerationCheckpoint checkpoint_from_json(const json& j) {
  try {
    if (j.at("format_version").get<int>() != kCheckpointFormatVersion) {
      throw std::invalid_argument("checkpoint: unsupported format_version");
    }
    EnumerationCheckpoint cp;
    cp.n = j.at("n").get<std::size_t>();
    cp.t = j.at("t").get<std::uint64_t>();
    cp.frontier = parse_strings(j, "frontier");
    cp.omega = tensor::dyadic_from_json(j.at("omega"));
    cp.census = parse_strings(j, "census");
    cp.timeout_count = j.value("timeout_count", std::uint64_t{0});
    cp.needs_more_count = j.value("needs_more_count", std::uint64_t{0});

    if (cp.n < 1 || cp.n > 62 || cp.t < 1) throw std::invalid_argument("checkpoint: n or t out of range");
    Dyadic sum;
    for (const auto& p : cp.census) {
      if (p.empty() || p.size() > cp.n) throw std::invalid_argument("checkpoint: census entry of invalid length");
      sum += Dyadic(1, static_cast<std::int32_t>(p.size()));
    }
    if (sum != cp.omega) throw std::invalid_argument("checkpoint: omega does not match census");
    for (const auto& f : cp.frontier) {
      if (f.size() >= cp.n) throw std::invalid_argument("checkpoint: frontier prefix too long");
    }
    return cp;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("checkpoint: ") + e.what());
  }
}

void write_checkpoint(const std::filesystem::path& path, const EnumerationCheckpoint& cp) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write checkpoint " + tmp.string());
    out << checkpoint_to_json(cp).dump() << '\n';
    out.flush();
    if (!out) throw std::runtime_error("failed writing checkpoint " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

EnumerationCheckpoint read_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read checkpoint " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  json j;
  try {
    j = json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("checkpoint " + path.string() + ": " + e.what());
  }
  return checkpoint_from_json(j);
}

}  // namespace classent::omega

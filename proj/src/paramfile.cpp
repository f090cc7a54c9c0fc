#include "thetalift/paramfile.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include <json.hpp>

namespace thetalift {

namespace {

using nlohmann::json;

std::int64_t require_int(const json& j, const char* where, const char* field) {
  if (!j.contains(field))
    throw validation_error(std::string(where) + ": missing field \"" + field + "\"");
  const json& v = j.at(field);
  if (!v.is_number_integer())
    throw validation_error(std::string(where) + ": field \"" + field + "\" must be an integer");
  return v.get<std::int64_t>();
}

}  // namespace

LParam parse_param_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw validation_error(std::string("malformed parameter file: ") + e.what());
  }
  if (!doc.is_object()) throw validation_error("parameter file must be a JSON object");

  const std::int64_t n64 = require_int(doc, "parameter file", "n");
  if (n64 <= 0 || n64 > 1 << 20) throw validation_error("\"n\" must be a positive integer");
  const int n = static_cast<int>(n64);

  struct Slot {
    long long mult = 0;
    std::optional<int> eta;
  };
  std::map<std::int64_t, Slot, std::greater<>> slots;

  if (doc.contains("relevant")) {
    const json& arr = doc.at("relevant");
    if (!arr.is_array()) throw validation_error("\"relevant\" must be an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string where = "relevant[" + std::to_string(i) + "]";
      const std::int64_t two_alpha = require_int(arr[i], where.c_str(), "two_alpha");
      const std::int64_t mult = require_int(arr[i], where.c_str(), "mult");
      const std::int64_t eta = require_int(arr[i], where.c_str(), "eta");
      if (mult < 1) throw validation_error(where + ": \"mult\" must be at least 1");
      if (eta != 1 && eta != -1) throw validation_error(where + ": \"eta\" must be 1 or -1");
      Slot& slot = slots[two_alpha];
      slot.mult += mult;
      if (slot.eta && *slot.eta != eta)
        throw validation_error(where + ": conflicting \"eta\" for two_alpha=" +
                               std::to_string(two_alpha));
      slot.eta = static_cast<int>(eta);
    }
  }

  std::vector<UnitaryChar> pairs;
  if (doc.contains("pairs")) {
    const json& arr = doc.at("pairs");
    if (!arr.is_array()) throw validation_error("\"pairs\" must be an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string where = "pairs[" + std::to_string(i) + "]";
      const std::int64_t winding = require_int(arr[i], where.c_str(), "winding");
      const std::int64_t t_num = require_int(arr[i], where.c_str(), "t_num");
      const std::int64_t t_den = require_int(arr[i], where.c_str(), "t_den");
      if (t_den == 0) throw validation_error(where + ": \"t_den\" must be nonzero");
      UnitaryChar xi{winding, Rational(t_num, t_den)};
      if (xi.is_chi() && ((winding - (n - 1)) % 2) == 0) {
        // Folds into the relevant part; its generator needs an eta.
        Slot& slot = slots[winding];
        slot.mult += 2;
        if (!slot.eta)
          throw validation_error(where + ": this pair folds into the relevant character "
                                 "two_alpha=" + std::to_string(winding) +
                                 "; declare that character under \"relevant\" with its eta");
      } else {
        pairs.push_back(xi);
      }
    }
  }

  std::vector<RelevantEntry> relevant;
  std::vector<int> signs;
  for (const auto& [two_alpha, slot] : slots) {
    relevant.push_back({HalfInt::from_twice(two_alpha), static_cast<int>(slot.mult)});
    signs.push_back(*slot.eta);
  }

  TempParam phi = build_param(n, std::move(relevant), std::move(pairs));
  ComponentChar eta = make_component_char(phi, std::move(signs));
  return {std::move(phi), std::move(eta)};
}

LParam load_param_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open parameter file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_param_json(buf.str());
}

std::string to_param_json(const TempParam& phi, const ComponentChar& eta) {
  json doc;
  doc["n"] = phi.n;
  doc["relevant"] = json::array();
  for (std::size_t i = 0; i < phi.relevant.size(); ++i)
    doc["relevant"].push_back({{"two_alpha", phi.relevant[i].alpha.twice},
                               {"mult", phi.relevant[i].mult},
                               {"eta", eta.signs[i]}});
  doc["pairs"] = json::array();
  for (const auto& xi : phi.pairs)
    doc["pairs"].push_back({{"winding", xi.winding},
                            {"t_num", xi.radial.numerator()},
                            {"t_den", xi.radial.denominator()}});
  return doc.dump(2);
}

namespace {

std::vector<HalfInt> parse_hc_block(const std::string& block) {
  std::vector<HalfInt> out;
  std::stringstream ss(block);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) {
      if (out.empty() && ss.eof()) break;  // fully empty block
      throw validation_error("empty entry in Harish-Chandra string");
    }
    const auto last = item.find_last_not_of(" \t");
    out.push_back(parse_half_int(item.substr(first, last - first + 1)));
  }
  return out;
}

}  // namespace

HCParam parse_hc_string(const std::string& text) {
  const auto sep = text.find(';');
  if (sep == std::string::npos)
    throw validation_error("Harish-Chandra string needs ';' between plus and minus blocks");
  if (text.find(';', sep + 1) != std::string::npos)
    throw validation_error("Harish-Chandra string has more than one ';'");
  return make_hc_param(parse_hc_block(text.substr(0, sep)),
                       parse_hc_block(text.substr(sep + 1)));
}

std::string format_hc(const HCParam& hc) {
  std::string out;
  for (std::size_t i = 0; i < hc.plus.size(); ++i) {
    if (i) out += ",";
    out += to_string(hc.plus[i]);
  }
  out += ";";
  for (std::size_t i = 0; i < hc.minus.size(); ++i) {
    if (i) out += ",";
    out += to_string(hc.minus[i]);
  }
  return out;
}

}  // namespace thetalift

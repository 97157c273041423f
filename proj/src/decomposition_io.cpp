#include <kirby/decomposition_io.hpp>

#include <fstream>
#include <limits>
#include <sstream>

namespace kirby {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& what) {
  throw Error(ErrorKind::Format, "decomposition file: " + what);
}

Integer integer_from_json(const json& j, const char* where) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_number_unsigned()) return Integer(j.get<unsigned long long>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
    if (s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos)
      return Integer(s);
  }
  bad(std::string("expected an integer in ") + where);
}

ExtInt ext_from_json(const json& j, const char* where) {
  if (j.is_string() && j.get_ref<const std::string&>() == "?") return ExtInt::unknown();
  return ExtInt(integer_from_json(j, where));
}

std::size_t count_from_json(const json& obj, const char* key) {
  if (!obj.contains(key)) bad(std::string("missing field '") + key + "'");
  const json& j = obj.at(key);
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    bad(std::string("field '") + key + "' must be a non-negative integer");
  return j.get<std::size_t>();
}

const json& array_field(const json& obj, const char* key) {
  if (!obj.contains(key)) bad(std::string("missing field '") + key + "'");
  const json& j = obj.at(key);
  if (!j.is_array()) bad(std::string("field '") + key + "' must be an array");
  return j;
}

}  // namespace

ordered_json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

ordered_json ext_to_json(const ExtInt& v) {
  return v.known() ? integer_to_json(v.value()) : ordered_json("?");
}

ordered_json to_json(const HandleDecomposition& x) {
  ordered_json out;
  out["h0"] = x.h0();
  out["one_handles"] = x.one_handles();
  out["two_handles"] = ordered_json::array();
  for (const auto& h : x.two_handles()) {
    ordered_json entry;
    entry["label"] = h.label;
    entry["framing"] = ext_to_json(h.framing);
    entry["knot"] = to_string(h.knot);
    out["two_handles"].push_back(std::move(entry));
  }
  out["linking"] = ordered_json::array();
  for (Eigen::Index i = 0; i < x.linking().rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index j = 0; j < x.linking().cols(); ++j) row.push_back(ext_to_json(x.linking()(i, j)));
    out["linking"].push_back(std::move(row));
  }
  out["incidence"] = ordered_json::array();
  for (Eigen::Index d = 0; d < x.incidence().rows(); ++d) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index k = 0; k < x.incidence().cols(); ++k)
      row.push_back(integer_to_json(x.incidence()(d, k)));
    out["incidence"].push_back(std::move(row));
  }
  out["h3"] = x.h3();
  out["h4"] = x.h4();
  return out;
}

HandleDecomposition decomposition_from_json(const json& j) {
  if (!j.is_object()) bad("top level must be an object");
  static const char* const keys[] = {"h0", "one_handles", "two_handles", "linking",
                                     "incidence", "h3", "h4"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool expected = false;
    for (const char* k : keys) expected = expected || it.key() == k;
    if (!expected) bad("unexpected field '" + it.key() + "'");
  }

  std::vector<std::string> one;
  for (const auto& label : array_field(j, "one_handles")) {
    if (!label.is_string()) bad("1-handle labels must be strings");
    one.push_back(label.get<std::string>());
  }

  std::vector<TwoHandle> two;
  for (const auto& h : array_field(j, "two_handles")) {
    if (!h.is_object() || !h.contains("label") || !h.contains("framing") || !h.contains("knot"))
      bad("each 2-handle needs label, framing and knot");
    if (!h.at("label").is_string() || !h.at("knot").is_string())
      bad("2-handle label and knot must be strings");
    two.push_back({h.at("label").get<std::string>(), ext_from_json(h.at("framing"), "framing"),
                   parse_knot_tag(h.at("knot").get<std::string>())});
  }

  const auto n = static_cast<Eigen::Index>(two.size());
  const auto m = static_cast<Eigen::Index>(one.size());
  const json& lrows = array_field(j, "linking");
  if (static_cast<Eigen::Index>(lrows.size()) != n) bad("linking must have one row per 2-handle");
  ExtMatrix linking(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const json& row = lrows[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
      bad("linking must be square");
    for (Eigen::Index c = 0; c < n; ++c) linking(r, c) = ext_from_json(row[static_cast<std::size_t>(c)], "linking");
  }

  const json& irows = array_field(j, "incidence");
  if (static_cast<Eigen::Index>(irows.size()) != m) bad("incidence must have one row per 1-handle");
  IntMatrix incidence(m, n);
  for (Eigen::Index r = 0; r < m; ++r) {
    const json& row = irows[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
      bad("incidence rows must have one entry per 2-handle");
    for (Eigen::Index c = 0; c < n; ++c)
      incidence(r, c) = integer_from_json(row[static_cast<std::size_t>(c)], "incidence");
  }

  return HandleDecomposition(count_from_json(j, "h0"), std::move(one), std::move(two),
                             std::move(linking), std::move(incidence), count_from_json(j, "h3"),
                             count_from_json(j, "h4"));
}

std::string write_decomposition(const HandleDecomposition& x) {
  return to_json(x).dump(2) + "\n";
}

HandleDecomposition read_decomposition(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    bad(e.what());
  }
  return decomposition_from_json(j);
}

HandleDecomposition load_decomposition_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Format, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_decomposition(buf.str());
}

void save_decomposition_file(const HandleDecomposition& x, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Format, "cannot write '" + path + "'");
  out << write_decomposition(x);
}

}  // namespace kirby

#include "fsaut/serialize.hpp"

#include <limits>

#include "fsaut/error.hpp"

namespace fsaut {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw ParseError(what, 1, 1); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

Index index_from_json(const Json& j, const char* what) {
  if (!j.is_number_unsigned() || j.get<std::uint64_t>() > std::numeric_limits<Index>::max())
    malformed(std::string(what) + " must be a nonnegative integer");
  return static_cast<Index>(j.get<std::uint64_t>());
}

}  // namespace

Json to_json(const Word& w) {
  Json out = Json::array();
  for (Letter l : w) out.push_back(Json::array({l.index, int{l.sign}}));
  return out;
}

Json to_json(const WordTuple& t) {
  Json out = Json::array();
  for (const Word& w : t) out.push_back(to_json(w));
  return out;
}

Json to_json(const FinSuppAut& phi) {
  Json out = Json::object();
  out["support"] = phi.width();
  out["images"] = to_json(phi.images());
  return out;
}

Json to_json(const Certificate& c) {
  Json out = Json::object();
  out["n"] = c.n;
  out["phi"] = to_json(c.phi);
  out["m"] = c.m;
  out["mprime"] = c.mprime;
  out["psi"] = to_json(c.psi);
  out["u"] = to_json(c.u);
  out["v"] = to_json(c.v);
  Json pairs = Json::array();
  for (const auto& [F, U] : c.pairs) pairs.push_back(Json::array({to_json(F), to_json(U)}));
  out["pairs"] = std::move(pairs);
  return out;
}

Json to_json(const VerificationReport& r) {
  Json out = Json::object();
  out["passed"] = r.passed();
  Json checks = Json::array();
  for (const CheckResult& c : r.checks) {
    Json item = Json::object();
    item["name"] = c.name;
    item["passed"] = c.passed;
    if (c.factor) item["factor"] = *c.factor;
    if (c.generator) item["generator"] = "a" + std::to_string(*c.generator);
    if (!c.detail.empty()) item["detail"] = c.detail;
    checks.push_back(std::move(item));
  }
  out["checks"] = std::move(checks);
  return out;
}

Word word_from_json(const Json& j) {
  if (!j.is_array()) malformed("a word must be an array of [index, sign] pairs");
  std::vector<Letter> raw;
  for (const Json& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[1].is_number_integer())
      malformed("a letter must be an [index, sign] pair");
    const Index index = index_from_json(pair[0], "letter index");
    const auto sign = pair[1].get<std::int64_t>();
    if (index == 0 || (sign != 1 && sign != -1)) malformed("letter needs index >= 1 and sign +1 or -1");
    raw.push_back(letter(index, static_cast<int>(sign)));
  }
  return Word(raw);
}

WordTuple tuple_from_json(const Json& j) {
  if (!j.is_array()) malformed("a tuple must be an array of words");
  WordTuple out;
  for (const Json& w : j) out.push_back(word_from_json(w));
  return out;
}

FinSuppAut aut_from_json(const Json& j) {
  const Index support = index_from_json(field(j, "support"), "support");
  WordTuple images = tuple_from_json(field(j, "images"));
  if (images.size() != support) malformed("support does not match the number of images");
  return FinSuppAut::from_images(std::move(images));
}

Certificate certificate_from_json(const Json& j) {
  Certificate c;
  c.n = index_from_json(field(j, "n"), "n");
  c.phi = aut_from_json(field(j, "phi"));
  c.m = index_from_json(field(j, "m"), "m");
  c.mprime = index_from_json(field(j, "mprime"), "mprime");
  c.psi = aut_from_json(field(j, "psi"));
  c.u = aut_from_json(field(j, "u"));
  c.v = aut_from_json(field(j, "v"));
  const Json& pairs = field(j, "pairs");
  if (!pairs.is_array() || pairs.size() != 3) malformed("pairs must hold exactly 3 [F, U] entries");
  for (std::size_t k = 0; k < 3; ++k) {
    if (!pairs[k].is_array() || pairs[k].size() != 2) malformed("each pair must be [F, U]");
    c.pairs[k] = {aut_from_json(pairs[k][0]), aut_from_json(pairs[k][1])};
  }
  return c;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 1, e.byte);
  }
}

}  // namespace fsaut

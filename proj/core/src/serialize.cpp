#include "mso/serialize.hpp"

#include <json.hpp>

#include "mso/error.hpp"

namespace mso {
namespace {

using Json = nlohmann::ordered_json;

Json poly_json(const IntPolynomial& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
  return arr;
}

void put_rational(Json& obj, const std::string& key, const Rational& value, int digits) {
  obj[key] = value.str();
  obj[key + "_decimal"] = to_decimal(value, digits);
}

Json anchor_json(const Anchor& anchor) {
  if (const auto* v = std::get_if<Vertex>(&anchor)) return Json{{"vertex", *v}};
  const Edge& e = std::get<Edge>(anchor);
  return Json{{"edge", {e.u, e.v, e.copy}}};
}

}  // namespace

std::string profile_to_json(const SubtreeProfile& p, int digits) {
  Json out;
  out["order"] = p.order;
  out["polynomial"] = poly_json(p.poly);
  out["total"] = p.total.get_str();
  out["weight"] = p.weight.get_str();
  put_rational(out, "mean", p.mean, digits);
  put_rational(out, "density", p.density, digits);
  out["spanning_count"] = p.spanning_count.get_str();
  put_rational(out, "spanning_proportion", p.spanning_proportion, digits);
  return out.dump(2) + "\n";
}

std::string local_profile_to_json(const LocalProfile& p, int digits) {
  Json out;
  out["anchor"] = anchor_json(p.anchor);
  out["polynomial"] = poly_json(p.poly);
  out["total"] = eval_at_one(p.poly).get_str();
  out["weight"] = deriv_at_one(p.poly).get_str();
  put_rational(out, "mean", p.mean, digits);
  put_rational(out, "density", p.density, digits);
  return out.dump(2) + "\n";
}

std::string scan_to_json(const EdgeScanResult& scan, int digits) {
  Json out;
  out["graph6"] = scan.graph6;
  put_rational(out, "base_mean", scan.base_mean, digits);
  Json pairs = Json::array();
  for (const auto& pr : scan.per_pair) {
    Json j;
    j["u"] = pr.u;
    j["v"] = pr.v;
    put_rational(j, "new_mean", pr.new_mean, digits);
    put_rational(j, "delta", pr.delta, digits);
    pairs.push_back(std::move(j));
  }
  out["per_pair"] = std::move(pairs);
  if (scan.worst_delta) put_rational(out, "worst_delta", *scan.worst_delta, digits);
  else out["worst_delta"] = nullptr;
  out["any_increase"] = scan.any_increase;
  out["any_decrease"] = scan.any_decrease;
  return out.dump(2) + "\n";
}

SubtreeProfile profile_from_json(const std::string& text) {
  try {
    const Json doc = Json::parse(text);
    std::vector<BigInt> coeffs;
    for (const auto& c : doc.at("polynomial")) coeffs.emplace_back(c.get<std::string>(), 10);
    SubtreeProfile p = make_profile(IntPolynomial(std::move(coeffs)), doc.at("order").get<std::size_t>());
    if (Rational::parse(doc.at("mean").get<std::string>()) != p.mean) {
      throw ParseError(0, "profile JSON mean does not match its polynomial");
    }
    return p;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte, "malformed profile JSON");
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("profile JSON: ") + e.what());
  }
}

}  // namespace mso

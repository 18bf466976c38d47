#include "plh/json_io.hpp"

namespace plh {

using nlohmann::json;

json to_json(const PLHomeo& f) {
  json pts = json::array();
  for (const Point& p : f.breakpoints()) pts.push_back(json::array({p.x.str(), p.y.str()}));
  return json{{"breakpoints", std::move(pts)}};
}

json to_json(const Interval& interval) {
  return json::array({interval.lo().str(), interval.hi().str()});
}

namespace {

Rational coordinate(const json& value, std::size_t index) {
  if (!value.is_string())
    throw Error(ErrorCode::parse,
                "breakpoint " + std::to_string(index) + ": coordinates must be strings \"p/q\"");
  try {
    return Rational::parse(value.get<std::string>());
  } catch (const Error& e) {
    throw Error(e.code(), "breakpoint " + std::to_string(index) + ": " + e.what());
  }
}

} // namespace

PLHomeo element_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("breakpoints") || !doc["breakpoints"].is_array())
    throw Error(ErrorCode::parse, "expected an object with a \"breakpoints\" array");
  std::vector<Point> pts;
  const json& list = doc["breakpoints"];
  for (std::size_t i = 0; i < list.size(); ++i) {
    const json& pair = list[i];
    if (!pair.is_array() || pair.size() != 2)
      throw Error(ErrorCode::parse, "breakpoint " + std::to_string(i) + " is not an [x, y] pair");
    pts.push_back(Point{coordinate(pair[0], i), coordinate(pair[1], i)});
  }
  return PLHomeo::from_canonical(std::move(pts));
}

PLHomeo element_from_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::parse, std::string("malformed JSON: ") + e.what());
  }
  return element_from_json(doc);
}

} // namespace plh

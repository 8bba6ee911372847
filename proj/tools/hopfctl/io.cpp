#include "io.hpp"

#include <algorithm>
#include <string>

namespace hopfctl::io {

void expect_keys(const json& obj, std::string_view what, std::initializer_list<std::string_view> allowed,
                 std::initializer_list<std::string_view> required) {
  if (!obj.is_object()) throw format_error(std::string(what) + " must be a JSON object");
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw format_error("unknown field '" + key + "' in " + std::string(what));
    }
  }
  for (std::string_view key : required) {
    if (!obj.contains(std::string(key))) {
      throw format_error("missing field '" + std::string(key) + "' in " + std::string(what));
    }
  }
}

double read_number(const json& j, std::string_view what) {
  if (!j.is_number()) throw format_error(std::string(what) + " must be a number");
  return j.get<double>();
}

namespace {

void expect_array(const json& j, std::size_t size, std::string_view what) {
  if (!j.is_array() || j.size() != size) {
    throw format_error(std::string(what) + " must be an array of " + std::to_string(size) + " elements");
  }
}

}  // namespace

json encode(std::complex<double> c) { return json::array({c.real(), c.imag()}); }

json encode(const hopf::Quaternion<double>& q) { return json::array({q.x0, q.x1, q.x2, q.x3}); }

json encode(const hopf::Point3<double>& p) { return json::array({p.x, p.y, p.z}); }

json encode(const hopf::ComplexPair<double>& v) {
  json out = json::object();
  out["z"] = encode(v.z);
  out["w"] = encode(v.w);
  return out;
}

json encode(const hopf::ExtendedComplex<double>& u) {
  if (u.is_infinity()) return "inf";
  return encode(u.value());
}

json encode(const hopf::SU2Matrix<double>& m) {
  return json::array({json::array({encode(m.a11()), encode(m.a12())}),
                      json::array({encode(m.a21()), encode(m.a22())})});
}

std::complex<double> decode_complex(const json& j) {
  expect_array(j, 2, "complex number");
  return {read_number(j[0], "real part"), read_number(j[1], "imaginary part")};
}

hopf::Quaternion<double> decode_quaternion(const json& j) {
  expect_array(j, 4, "quaternion");
  return {read_number(j[0], "x0"), read_number(j[1], "x1"), read_number(j[2], "x2"),
          read_number(j[3], "x3")};
}

hopf::Point3<double> decode_point3(const json& j) {
  expect_array(j, 3, "point");
  return {read_number(j[0], "x"), read_number(j[1], "y"), read_number(j[2], "z")};
}

hopf::ComplexPair<double> decode_complex_pair(const json& j) {
  expect_keys(j, "complex pair", {"z", "w"}, {"z", "w"});
  return {decode_complex(j.at("z")), decode_complex(j.at("w"))};
}

hopf::ExtendedComplex<double> decode_extended_complex(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return hopf::ExtendedComplex<double>::infinity();
    throw format_error("extended complex string must be \"inf\"");
  }
  return hopf::ExtendedComplex<double>(decode_complex(j));
}

json encode_axis_angle(double theta, const hopf::Point3<double>& axis) {
  json out = json::object();
  out["theta"] = theta;
  out["axis"] = encode(axis);
  return out;
}

RawAxisAngle decode_axis_angle(const json& j) {
  expect_keys(j, "axis-angle", {"theta", "axis"}, {"theta", "axis"});
  return {read_number(j.at("theta"), "theta"), decode_point3(j.at("axis"))};
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw format_error(std::string("malformed JSON: ") + e.what());
  }
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace hopfctl::io

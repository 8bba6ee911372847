#pragma once

// JSON encoding of the library's value types.
//
//   complex           [re, im]
//   quaternion        [x0, x1, x2, x3]
//   point3            [x, y, z]
//   complex pair      {"z": [re, im], "w": [re, im]}
//   extended complex  [re, im] or "inf"
//   axis-angle        {"theta": radians, "axis": [x, y, z]}
//   SU(2) matrix      [[a11, a12], [a21, a22]] of complex entries
//
// Decoders throw io::format_error on shape problems; nothing here checks
// norms, which is the caller's business.

#include <complex>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "hopf/hopf.hpp"

namespace hopfctl::io {

using json = nlohmann::ordered_json;

class format_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rejects keys outside `allowed` and requires every key in `required`.
void expect_keys(const json& obj, std::string_view what, std::initializer_list<std::string_view> allowed,
                 std::initializer_list<std::string_view> required);

double read_number(const json& j, std::string_view what);

json encode(std::complex<double> c);
json encode(const hopf::Quaternion<double>& q);
json encode(const hopf::Point3<double>& p);
json encode(const hopf::ComplexPair<double>& v);
json encode(const hopf::ExtendedComplex<double>& u);
json encode(const hopf::SU2Matrix<double>& m);

std::complex<double> decode_complex(const json& j);
hopf::Quaternion<double> decode_quaternion(const json& j);
hopf::Point3<double> decode_point3(const json& j);
hopf::ComplexPair<double> decode_complex_pair(const json& j);
hopf::ExtendedComplex<double> decode_extended_complex(const json& j);

/// An axis-angle document before the axis has been validated.
struct RawAxisAngle {
  double theta = 0;
  hopf::Point3<double> axis;
};

json encode_axis_angle(double theta, const hopf::Point3<double>& axis);
RawAxisAngle decode_axis_angle(const json& j);

json parse_document(std::string_view text);

/// Two-space indented dump followed by a newline.
std::string dump(const json& doc);

}  // namespace hopfctl::io

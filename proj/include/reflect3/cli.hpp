#pragma once

// JSON/CSV front end shared by the reflect3 command-line tool and its tests.
//
// Motion documents (MotionSpec):
//   {"kind":"rotation","point":[x,y,z],"dir":[x,y,z],"angle":A}
//   {"kind":"translation","v":[x,y,z]}
//   {"kind":"reflection","normal":[x,y,z],"offset":d}     plane normal . x = d
//   {"kind":"inversion","center":[x,y,z]}
//   {"kind":"sequence","steps":[MotionSpec, ...]}           first step applied first
//   {"kind":"affine","linear":[9 numbers, row major],"translation":[x,y,z]}
// A is radians, either a number or a string such as "pi/6", "-pi/2", "3*pi/4".
// Documents emitted by `compose` (linear + translation) and by `classify`
// ("class" + parameters) are accepted as motions too.
//
// Triple documents: {"A":[x,y,z],"B":[x,y,z],"C":[x,y,z]}.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "reflect3/classify.hpp"
#include "reflect3/construct.hpp"
#include "reflect3/geom3.hpp"
#include "reflect3/motion.hpp"
#include "reflect3/papercase.hpp"

namespace reflect3::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kSuccess = 0, kInputError = 2, kPreconditionError = 3 };

/// Malformed or invalid input document.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parsing ------------------------------------------------------------------

double parse_angle(const Json& value);
Vector3d parse_vector(const Json& value, const char* field);
AffineIsometryd parse_motion(const Json& doc);
MotionClassd parse_class(const Json& doc);
PointTripled parse_triple(const Json& doc, const Toleranced& tol);
Point3d parse_start(const std::string& text);
Json read_json(std::istream& in);

// Serialization --------------------------------------------------------------

/// Shortest round-trip decimal; integral values print without a fraction.
std::string format_number(double x);
Json number(double x);
Json to_json(const Vector3d& v);
Json to_json(const Planed& p);
Json to_json(const Line3d& l);
Json to_json(const AffineIsometryd& m);
Json to_json(const MotionClassd& c);
Json to_json(const papercase::ExampleReport<double>& r);
std::string dump(const Json& doc);

// Commands -------------------------------------------------------------------
//
// Each writes its result to `out`, and throws InputError or GeometryError on
// failure (see exit_code_for).

void cmd_classify(const Json& motion, const Toleranced& tol, std::ostream& out);
void cmd_compose(const Json& motion, std::ostream& out);
void cmd_triples(const Json& src, const Json& dst, const Toleranced& tol, std::ostream& out);
void cmd_iterate(const Json& motion, const std::string& start, long long count, const std::string& format,
                 std::ostream& out);
void cmd_example(const Toleranced& tol, std::ostream& out);

int exit_code_for(const GeometryError& e);

/// Schema summary printed by --help.
std::string schema_help();

}  // namespace reflect3::cli

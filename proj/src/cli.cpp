#include "reflect3/cli.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <regex>
#include <sstream>

namespace reflect3::cli {

namespace {

const Json& require_field(const Json& doc, const char* field) {
    if (!doc.is_object() || !doc.contains(field))
        throw InputError(std::string("missing field \"") + field + "\"");
    return doc.at(field);
}

double parse_finite(const Json& value, const char* field) {
    if (!value.is_number())
        throw InputError(std::string("field \"") + field + "\" must be a number");
    const double x = value.get<double>();
    if (!std::isfinite(x))
        throw InputError(std::string("field \"") + field + "\" must be finite");
    return x;
}

Vector3d parse_nonzero(const Json& value, const char* field) {
    const Vector3d v = parse_vector(value, field);
    if (v.norm() == 0)
        throw InputError(std::string("field \"") + field + "\" must be nonzero");
    return v;
}

Planed parse_plane(const Json& doc) {
    return Planed(parse_nonzero(require_field(doc, "normal"), "normal"),
                  parse_finite(require_field(doc, "offset"), "offset"));
}

Line3d parse_line(const Json& doc) {
    return Line3d(parse_vector(require_field(doc, "point"), "point"), parse_nonzero(require_field(doc, "dir"), "dir"));
}

AffineIsometryd parse_affine(const Json& doc) {
    const Json& linear = require_field(doc, "linear");
    if (!linear.is_array() || linear.size() != 9)
        throw InputError("field \"linear\" must hold 9 numbers");
    Matrix3d l;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            l(r, c) = parse_finite(linear[r * 3 + c], "linear");
    try {
        return AffineIsometryd(l, parse_vector(require_field(doc, "translation"), "translation"));
    } catch (const GeometryError& e) {
        throw InputError(e.what());
    }
}

}  // namespace

// ---------------------------------------------------------------------------

double parse_angle(const Json& value) {
    if (value.is_number())
        return parse_finite(value, "angle");
    if (!value.is_string())
        throw InputError("angle must be a number or a multiple of pi such as \"pi/6\"");
    static const std::regex pattern(R"(^\s*(-)?\s*(?:(\d+(?:\.\d*)?)\s*\*?\s*)?pi\s*(?:/\s*(\d+(?:\.\d*)?))?\s*$)");
    const std::string text = value.get<std::string>();
    std::smatch match;
    if (!std::regex_match(text, match, pattern))
        throw InputError("cannot parse angle \"" + text + "\"");
    double angle = std::numbers::pi;
    if (match[2].matched)
        angle *= std::stod(match[2].str());
    if (match[3].matched) {
        const double denom = std::stod(match[3].str());
        if (denom == 0)
            throw InputError("angle denominator is zero");
        angle /= denom;
    }
    return match[1].matched ? -angle : angle;
}

Vector3d parse_vector(const Json& value, const char* field) {
    if (!value.is_array() || value.size() != 3)
        throw InputError(std::string("field \"") + field + "\" must be an array of 3 numbers");
    return Vector3d(parse_finite(value[0], field), parse_finite(value[1], field), parse_finite(value[2], field));
}

AffineIsometryd parse_motion(const Json& doc) {
    if (!doc.is_object())
        throw InputError("motion must be a JSON object");
    if (!doc.contains("kind")) {
        if (doc.contains("class"))
            return reconstruct(parse_class(doc));
        if (doc.contains("linear"))
            return parse_affine(doc);
        throw InputError("motion needs a \"kind\" field");
    }
    const Json& kind_field = doc.at("kind");
    if (!kind_field.is_string())
        throw InputError("\"kind\" must be a string");
    const std::string kind = kind_field.get<std::string>();
    try {
        if (kind == "rotation") {
            return rotation_about(parse_vector(require_field(doc, "point"), "point"),
                                  parse_nonzero(require_field(doc, "dir"), "dir"), parse_angle(require_field(doc, "angle")));
        }
        if (kind == "translation")
            return translation(parse_vector(require_field(doc, "v"), "v"));
        if (kind == "reflection")
            return reflection(parse_plane(doc));
        if (kind == "inversion")
            return inversion(parse_vector(require_field(doc, "center"), "center"));
        if (kind == "affine")
            return parse_affine(doc);
        if (kind == "sequence") {
            const Json& steps = require_field(doc, "steps");
            if (!steps.is_array() || steps.empty())
                throw InputError("\"steps\" must be a nonempty array");
            AffineIsometryd m;
            for (const auto& step : steps)
                m = then(m, parse_motion(step));
            return m;
        }
    } catch (const GeometryError& e) {
        throw InputError(e.what());
    }
    throw InputError("unknown motion kind \"" + kind + "\"");
}

MotionClassd parse_class(const Json& doc) {
    const Json& name_field = require_field(doc, "class");
    if (!name_field.is_string())
        throw InputError("\"class\" must be a string");
    const std::string name = name_field.get<std::string>();
    try {
        if (name == "identity")
            return Identity<double>{};
        if (name == "translation")
            return Translation<double>{parse_vector(require_field(doc, "v"), "v")};
        if (name == "rotation")
            return Rotation<double>{parse_line(require_field(doc, "axis")), parse_angle(require_field(doc, "angle"))};
        if (name == "screw")
            return Screw<double>{parse_line(require_field(doc, "axis")), parse_angle(require_field(doc, "angle")),
                                 parse_vector(require_field(doc, "slide"), "slide")};
        if (name == "reflection")
            return Reflection<double>{parse_plane(require_field(doc, "mirror"))};
        if (name == "glide_reflection")
            return GlideReflection<double>{parse_plane(require_field(doc, "mirror")),
                                           parse_vector(require_field(doc, "slide"), "slide")};
        if (name == "inversion")
            return Inversion<double>{parse_vector(require_field(doc, "center"), "center")};
        if (name == "rotary_reflection")
            return RotaryReflection<double>{parse_plane(require_field(doc, "mirror")),
                                            parse_vector(require_field(doc, "center"), "center"),
                                            parse_angle(require_field(doc, "angle"))};
    } catch (const GeometryError& e) {
        throw InputError(e.what());
    }
    throw InputError("unknown class \"" + name + "\"");
}

PointTripled parse_triple(const Json& doc, const Toleranced& tol) {
    const Vector3d a = parse_vector(require_field(doc, "A"), "A");
    const Vector3d b = parse_vector(require_field(doc, "B"), "B");
    const Vector3d c = parse_vector(require_field(doc, "C"), "C");
    try {
        return PointTripled(a, b, c, tol);
    } catch (const GeometryError& e) {
        throw InputError(e.what());
    }
}

Point3d parse_start(const std::string& text) {
    std::vector<double> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos)
            comma = text.size();
        std::string token = text.substr(pos, comma - pos);
        const auto first = token.find_first_not_of(" \t");
        const auto last = token.find_last_not_of(" \t");
        token = first == std::string::npos ? std::string() : token.substr(first, last - first + 1);
        double x = 0;
        const auto* begin = token.data();
        const auto* end = token.data() + token.size();
        auto [ptr, ec] = std::from_chars(begin, end, x);
        if (token.empty() || ec != std::errc() || ptr != end || !std::isfinite(x))
            throw InputError("malformed start point \"" + text + "\"; expected \"x,y,z\"");
        values.push_back(x);
        pos = comma + 1;
    }
    if (values.size() != 3)
        throw InputError("malformed start point \"" + text + "\"; expected \"x,y,z\"");
    return Point3d(values[0], values[1], values[2]);
}

Json read_json(std::istream& in) {
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
}

// ---------------------------------------------------------------------------

std::string format_number(double x) {
    if (x == 0)
        x = 0;  // drop the sign of negative zero
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

Json number(double x) {
    if (x == 0)
        return 0;
    if (std::nearbyint(x) == x && std::abs(x) < 9007199254740992.0)
        return static_cast<long long>(x);
    return x;
}

Json to_json(const Vector3d& v) {
    return Json::array({number(v.x()), number(v.y()), number(v.z())});
}

Json to_json(const Planed& p) {
    Json out;
    out["normal"] = to_json(p.normal());
    out["offset"] = number(p.offset());
    return out;
}

Json to_json(const Line3d& l) {
    Json out;
    out["point"] = to_json(l.point());
    out["dir"] = to_json(l.direction());
    return out;
}

Json to_json(const AffineIsometryd& m) {
    Json linear = Json::array();
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            linear.push_back(number(m.linear()(r, c)));
    Json out;
    out["linear"] = linear;
    out["translation"] = to_json(m.translation());
    return out;
}

Json to_json(const MotionClassd& mc) {
    Json out;
    out["class"] = class_name(kind(mc));
    std::visit(
        [&](const auto& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, Translation<double>>) {
                out["v"] = to_json(c.v);
            } else if constexpr (std::is_same_v<T, Rotation<double>>) {
                out["axis"] = to_json(c.axis);
                out["angle"] = number(c.angle);
            } else if constexpr (std::is_same_v<T, Screw<double>>) {
                out["axis"] = to_json(c.axis);
                out["angle"] = number(c.angle);
                out["slide"] = to_json(c.slide);
            } else if constexpr (std::is_same_v<T, Reflection<double>>) {
                out["mirror"] = to_json(c.mirror);
            } else if constexpr (std::is_same_v<T, GlideReflection<double>>) {
                out["mirror"] = to_json(c.mirror);
                out["slide"] = to_json(c.slide);
            } else if constexpr (std::is_same_v<T, Inversion<double>>) {
                out["center"] = to_json(c.center);
            } else if constexpr (std::is_same_v<T, RotaryReflection<double>>) {
                out["mirror"] = to_json(c.mirror);
                out["center"] = to_json(c.center);
                out["angle"] = number(c.angle);
            }
        },
        mc);
    return out;
}

Json to_json(const papercase::ExampleReport<double>& r) {
    Json out;
    out["A"] = to_json(r.a);
    out["B"] = to_json(r.b);
    out["B_prime"] = to_json(r.b_prime);
    out["axis_k"] = to_json(r.axis_k);
    out["n_direction"] = to_json(r.n_direction);
    out["theta"] = number(r.theta);
    out["theta_from_trace"] = number(r.theta_from_trace);
    out["mirror_dihedral"] = number(r.mirror_dihedral);
    out["p"] = to_json(r.p);
    out["m"] = to_json(r.m);
    out["residual"] = to_json(r.residual);
    out["residual_dot_n"] = number(r.residual_dot_n);
    out["screw_axis_h"] = to_json(r.screw_axis_h);
    out["screw_angle_h"] = number(r.screw_angle_h);
    out["bisector_normal_AB"] = to_json(r.bisector_normal_ab);
    out["bisector_normal_BB_prime"] = to_json(r.bisector_normal_bb);
    return out;
}

std::string dump(const Json& doc) {
    return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------

void cmd_classify(const Json& motion, const Toleranced& tol, std::ostream& out) {
    out << dump(to_json(classify(parse_motion(motion), tol)));
}

void cmd_compose(const Json& motion, std::ostream& out) {
    out << dump(to_json(parse_motion(motion)));
}

void cmd_triples(const Json& src_doc, const Json& dst_doc, const Toleranced& tol, std::ostream& out) {
    const PointTripled src = parse_triple(src_doc, tol);
    const TargetTripled dst{parse_vector(require_field(dst_doc, "A"), "A"), parse_vector(require_field(dst_doc, "B"), "B"),
                            parse_vector(require_field(dst_doc, "C"), "C")};
    const TriplePaird pair{src, dst};
    const ReflectionSequenced i = three_reflections(pair, tol);
    const ReflectionSequenced j = second_motion(i, dst, tol);
    const AffineIsometryd mi = seq_to_affine(i);
    const AffineIsometryd mj = seq_to_affine(j);

    double worst = 0;
    for (const auto& [from, to] : {std::pair{src.a, dst.a}, std::pair{src.b, dst.b}, std::pair{src.c, dst.c}}) {
        worst = std::max(worst, (apply(i, from) - to).norm());
        worst = std::max(worst, (apply(j, from) - to).norm());
    }

    Json planes = Json::array();
    for (const auto& p : i.planes)
        planes.push_back(to_json(p));
    Json doc;
    doc["planes"] = planes;
    doc["fourth_plane"] = to_json(j.planes.back());
    doc["i"] = to_json(classify(mi, tol));
    doc["j"] = to_json(classify(mj, tol));
    doc["max_mapping_error"] = number(worst);
    doc["self_check"] = worst <= 10 * tol.eps_len;
    out << dump(doc);
}

void cmd_iterate(const Json& motion, const std::string& start, long long count, const std::string& format,
                 std::ostream& out) {
    if (count < 0)
        throw InputError("--count must be nonnegative");
    if (format != "csv" && format != "json")
        throw InputError("--format must be csv or json");
    const AffineIsometryd m = parse_motion(motion);
    const auto points = papercase::iterate(m, parse_start(start), static_cast<std::size_t>(count));
    if (format == "csv") {
        out << "i,x,y,z\n";
        for (std::size_t i = 0; i < points.size(); ++i) {
            out << i << ',' << format_number(points[i].x()) << ',' << format_number(points[i].y()) << ','
                << format_number(points[i].z()) << '\n';
        }
        return;
    }
    Json rows = Json::array();
    for (std::size_t i = 0; i < points.size(); ++i) {
        Json row;
        row["i"] = i;
        row["x"] = number(points[i].x());
        row["y"] = number(points[i].y());
        row["z"] = number(points[i].z());
        rows.push_back(row);
    }
    out << dump(rows);
}

void cmd_example(const Toleranced& tol, std::ostream& out) {
    out << dump(to_json(papercase::analyze(tol)));
}

int exit_code_for(const GeometryError& e) {
    switch (e.code()) {
    case ErrorCode::NotCongruent:
    case ErrorCode::NotAFixedPoint:
    case ErrorCode::DegenerateSource:
        return kPreconditionError;
    default:
        return kInputError;
    }
}

std::string schema_help() {
    return R"(Motion documents (--input FILE, or stdin when omitted):
  {"kind":"rotation","point":[x,y,z],"dir":[x,y,z],"angle":A}
  {"kind":"translation","v":[x,y,z]}
  {"kind":"reflection","normal":[x,y,z],"offset":d}    mirror {x : normal.x = d}
  {"kind":"inversion","center":[x,y,z]}
  {"kind":"sequence","steps":[motion, ...]}           first step applied first
  {"kind":"affine","linear":[9 numbers, row major],"translation":[x,y,z]}
  Outputs of `compose` and `classify` are accepted as motions as well.
  Angles are radians: a number or "pi", "pi/6", "-pi/2", "3*pi/4", ...

Triple documents (--src, --dst):
  {"A":[x,y,z],"B":[x,y,z],"C":[x,y,z]}

classify output: {"class": identity | translation | rotation | screw | reflection |
  glide_reflection | inversion | rotary_reflection, then per class:
  "v", "axis":{"point","dir"}, "angle", "slide", "mirror":{"normal","offset"}, "center"}

Exit codes: 0 success, 2 input error, 3 precondition violation (e.g. NotCongruent).
)";
}

}  // namespace reflect3::cli

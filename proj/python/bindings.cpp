#include "dyckframe/counting.hpp"
#include "dyckframe/error.hpp"
#include "dyckframe/frames.hpp"
#include "dyckframe/paths.hpp"
#include "dyckframe/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace pybind11::detail {

// Count <-> Python int, through the decimal rendering.
template <>
struct type_caster<dyckframe::Count> {
  PYBIND11_TYPE_CASTER(dyckframe::Count, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    value = dyckframe::Count(std::string(py::str(src)));
    return true;
  }

  static handle cast(const dyckframe::Count& c, return_value_policy, handle) {
    return PyLong_FromString(c.str().c_str(), nullptr, 10);
  }
};

}  // namespace pybind11::detail

namespace {

using namespace dyckframe;

using Counts = std::vector<std::int64_t>;

RawSequence raw(const Counts& counts) { return RawSequence(counts); }

Counts counts_of(const RawSequence& s) { return {s.counts().begin(), s.counts().end()}; }

Frame frame(const Counts& counts) { return Frame::require(RawSequence(counts)); }

EnumerationLimits limits(bool allow_large) { return allow_large ? EnumerationLimits::unlimited() : EnumerationLimits{}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Frames of Dyck paths and exact Dyck/Motzkin path counts";

  auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<MalformedPath>(m, "MalformedPath", error.ptr());
  py::register_exception<NotDyck>(m, "NotDyck", error.ptr());
  py::register_exception<ResourceLimit>(m, "ResourceLimit", error.ptr());
  py::register_exception<Underflow>(m, "Underflow", error.ptr());
  py::register_exception<NotLifted>(m, "NotLifted", error.ptr());
  py::register_exception<NotAdmissible>(m, "NotAdmissible", error.ptr());
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<InvalidArgument>(m, "InvalidArgument", error.ptr());

  py::class_<Path>(m, "Path")
      .def(py::init<>())
      .def_static("parse", &Path::parse, py::arg("text"))
      .def("is_dyck", &Path::is_dyck)
      .def("__len__", &Path::size)
      .def("__str__", &Path::to_string)
      .def("__repr__", [](const Path& p) { return "Path('" + p.to_string() + "')"; })
      .def("__eq__", [](const Path& a, const Path& b) { return a == b; })
      .def("__hash__", [](const Path& p) { return py::hash(py::str(p.to_string())); });

  // Paths
  m.def("parse_path", &parse_path, py::arg("text"));
  m.def("level_sequence", &level_sequence, py::arg("path"));
  m.def("foot_count", &foot_count, py::arg("path"), py::arg("level"));
  m.def("frame_of", [](const Path& p) { return counts_of(frame_of(p).sequence()); }, py::arg("path"));
  m.def("lift", &lift, py::arg("path"));
  m.def("glue", &glue, py::arg("p"), py::arg("q"));
  m.def("enumerate_dyck", [](std::size_t n, bool allow_large) { return enumerate_dyck(n, limits(allow_large)); },
        py::arg("half_length"), py::kw_only(), py::arg("allow_large") = false);
  m.def(
      "enumerate_motzkin",
      [](std::size_t n, std::optional<std::set<std::size_t>> levels, bool allow_large) {
        return enumerate_motzkin(n, std::move(levels), limits(allow_large));
      },
      py::arg("length"), py::arg("horizontal_levels") = py::none(), py::kw_only(), py::arg("allow_large") = false);

  // Frames; sequences are plain lists of ints.
  m.def("parse_sequence", [](std::string_view t) { return counts_of(parse_sequence(t)); }, py::arg("text"));
  m.def("frame_length", [](const Counts& s) { return frame_length(raw(s)); }, py::arg("seq"));
  m.def("lift_frame", [](const Counts& s) { return counts_of(lift_frame(raw(s))); }, py::arg("seq"));
  m.def("glue_frames", [](const Counts& u, const Counts& v) { return counts_of(glue_frames(raw(u), raw(v))); },
        py::arg("u"), py::arg("v"));
  m.def("extend_frame", [](const Counts& s) { return counts_of(extend_frame(raw(s))); }, py::arg("seq"));
  m.def("unextend", [](const Counts& s) { return counts_of(unextend(raw(s))); }, py::arg("seq"));
  m.def("unlift", [](const Counts& s) { return counts_of(unlift(raw(s))); }, py::arg("seq"));
  m.def("is_admissible_trace", [](const Counts& s) { return is_admissible_trace(raw(s)); }, py::arg("seq"));
  m.def("is_admissible_closed", [](const Counts& s) { return is_admissible_closed(raw(s)); }, py::arg("seq"));
  m.def(
      "enumerate_frames",
      [](std::size_t n, bool allow_large) {
        std::vector<Counts> out;
        for (const Frame& f : enumerate_frames(n, limits(allow_large))) out.push_back(counts_of(f.sequence()));
        return out;
      },
      py::arg("half_length"), py::kw_only(), py::arg("allow_large") = false);
  m.def("canonical_representative", [](const Counts& f) { return canonical_representative(frame(f)); },
        py::arg("frame"));
  m.def("consequences_hold", [](const Counts& f) { return consequences_hold(frame(f)); }, py::arg("frame"));

  // Counting
  py::class_<FootTable>(m, "FootTable")
      .def(py::init<std::size_t, std::size_t>(), py::arg("max_level"), py::arg("max_half_length"))
      .def("at", &FootTable::at, py::arg("half_length"), py::arg("level"), py::arg("feet"))
      .def_property_readonly("max_level", &FootTable::max_level)
      .def_property_readonly("max_half_length", &FootTable::max_half_length);

  m.def("binomial", &binomial, py::arg("a"), py::arg("b"));
  m.def("catalan", &catalan, py::arg("n"));
  m.def("feet_table", &feet_table, py::arg("max_level"), py::arg("max_half_length"));
  m.def("frame_cardinality", [](const Counts& f) { return frame_cardinality(frame(f)); }, py::arg("frame"));
  m.def("up_steps_per_level", [](const Counts& f) { return up_steps_per_level(frame(f)); }, py::arg("frame"));
  m.def(
      "count_colored_dyck",
      [](std::size_t n, std::vector<std::uint64_t> u, std::vector<std::uint64_t> d, bool allow_large) {
        return count_colored_dyck(n, ColorSpec{{}, std::move(u), std::move(d)}, limits(allow_large));
      },
      py::arg("half_length"), py::arg("u"), py::arg("d"), py::kw_only(), py::arg("allow_large") = false);
  m.def("count_k_motzkin", &count_k_motzkin, py::arg("length"), py::arg("level"), py::arg("r") = 1);
  m.def("count_motzkin", [](std::size_t n, bool allow_large) { return count_motzkin(n, limits(allow_large)); },
        py::arg("length"), py::kw_only(), py::arg("allow_large") = false);
  m.def(
      "count_colored_motzkin",
      [](std::size_t n, std::vector<std::uint64_t> h, std::vector<std::uint64_t> u, std::vector<std::uint64_t> d,
         bool allow_large) {
        return count_colored_motzkin(n, ColorSpec{std::move(h), std::move(u), std::move(d)}, limits(allow_large));
      },
      py::arg("length"), py::arg("h"), py::arg("u"), py::arg("d"), py::kw_only(), py::arg("allow_large") = false);
  m.def("weak_compositions", &weak_compositions, py::arg("total"), py::arg("parts"));
  m.def("binomial_identity_check", &binomial_identity_check, py::arg("m"), py::arg("parts"));

  m.def(
      "run_verification",
      [](std::size_t max_n) {
        const auto report = run_verification(max_n);
        py::list checks;
        for (const auto& c : report.checks) {
          py::dict d;
          d["name"] = c.name;
          d["parameters"] = c.parameters;
          d["expected"] = c.expected;
          d["actual"] = c.actual;
          d["pass"] = c.pass;
          checks.append(d);
        }
        return checks;
      },
      py::arg("max_n"));
}

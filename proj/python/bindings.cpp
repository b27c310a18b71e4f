#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "twogroups/constructions.hpp"
#include "twogroups/report.hpp"
#include "twogroups/structure.hpp"

namespace py = pybind11;
using namespace twogroups;

namespace {

Family family_arg(std::string const& s) {
  auto f = parse_family(s);
  if (!f) throw py::value_error("unknown family '" + s + "'");
  return *f;
}

CaseId case_arg(std::string const& s) {
  auto c = parse_case(s);
  if (!c) throw py::value_error("unknown case '" + s + "'");
  return *c;
}

EnumerationOptions enum_opts(std::string const& mode, unsigned jobs) {
  EnumerationOptions o;
  if (mode == "brute")
    o.mode = EnumerationMode::Brute;
  else if (mode != "pruned")
    throw py::value_error("mode must be 'pruned' or 'brute'");
  o.jobs = jobs;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "2-generator class-2 2-groups with cyclic center";

  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<InapplicableCase>(m, "InapplicableCase", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);

  py::class_<Elem>(m, "Elem")
      .def(py::init<std::int64_t, std::int64_t, std::int64_t>(), py::arg("i") = 0,
           py::arg("j") = 0, py::arg("k") = 0)
      .def(py::init([](py::tuple t) {
        if (t.size() != 3) throw py::value_error("expected (i, j, k)");
        return Elem{t[0].cast<std::int64_t>(), t[1].cast<std::int64_t>(), t[2].cast<std::int64_t>()};
      }))
      .def_readwrite("i", &Elem::i)
      .def_readwrite("j", &Elem::j)
      .def_readwrite("k", &Elem::k)
      .def("as_tuple", [](Elem const& e) { return py::make_tuple(e.i, e.j, e.k); })
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__hash__", [](Elem const& e) { return py::hash(py::make_tuple(e.i, e.j, e.k)); })
      .def("__repr__", [](Elem const& e) { return "Elem" + to_string(e); });
  py::implicitly_convertible<py::tuple, Elem>();

  py::class_<FamilyGroup>(m, "Group")
      .def_property_readonly("family", [](FamilyGroup const& G) { return std::string(to_string(G.family())); })
      .def_property_readonly("n", &FamilyGroup::n)
      .def_property_readonly("r", &FamilyGroup::r)
      .def_property_readonly("order", &FamilyGroup::order)
      .def_property_readonly("name", &FamilyGroup::name)
      .def_property_readonly("a", &FamilyGroup::a)
      .def_property_readonly("b", &FamilyGroup::b)
      .def_property_readonly("c", &FamilyGroup::c)
      .def_property_readonly("identity", &FamilyGroup::identity)
      .def("normalize", &FamilyGroup::normalize)
      .def("mul", &FamilyGroup::mul)
      .def("inv", &FamilyGroup::inv)
      .def("pow", &FamilyGroup::pow)
      .def("commutator", &FamilyGroup::commutator)
      .def("element_order", &FamilyGroup::element_order)
      .def("elements", &FamilyGroup::all_elements)
      .def("__eq__", [](FamilyGroup const& x, FamilyGroup const& y) { return x == y; })
      .def("__repr__", &FamilyGroup::name);

  m.def("make_group",
        [](std::string const& family, int n, std::optional<int> r) {
          return make_group(family_arg(family), n, r);
        },
        py::arg("family"), py::arg("n"), py::arg("r") = py::none());
  m.def("family_members",
        [](std::string const& family, std::uint64_t max_order) {
          return family_members(family_arg(family), max_order);
        },
        py::arg("family"), py::arg("max_order"));

  py::class_<SubgroupSet>(m, "Subgroup")
      .def_property_readonly("order", &SubgroupSet::order)
      .def("elements", &SubgroupSet::elements)
      .def("generators", &SubgroupSet::generators)
      .def("__contains__", &SubgroupSet::contains)
      .def("__len__", &SubgroupSet::order)
      .def("is_subgroup_of", &SubgroupSet::is_subgroup_of)
      .def("is_abelian", &SubgroupSet::is_abelian)
      .def("__eq__", [](SubgroupSet const& x, SubgroupSet const& y) { return x == y; });

  m.def("center", &center);
  m.def("frattini", &frattini);
  m.def("derived_subgroup", &derived_subgroup);
  m.def("omega1", &omega1);
  m.def("centralizer", &centralizer);
  m.def("center_of", &center_of);
  m.def("is_cyclic", &is_cyclic);
  m.def("d", [](FamilyGroup const& G) { return d_of_group(G); });
  m.def("d", [](SubgroupSet const& H) { return d_of(H); });
  m.def("closure", [](std::vector<Elem> const& gens, FamilyGroup const& G) { return closure(gens, G); });

  py::class_<Aut>(m, "Aut")
      .def_property_readonly("image_a", [](Aut const& a) { return a.map().image_a; })
      .def_property_readonly("image_b", [](Aut const& a) { return a.map().image_b; })
      .def_property_readonly("group", &Aut::group)
      .def("__call__", &Aut::apply)
      .def("order", &aut_order)
      .def("is_inner", [](Aut const& a) { return is_inner_direct(a).has_value(); })
      .def("conjugator", &is_inner_direct)
      .def("is_inner_criterion", &is_inner_criterion)
      .def("fixes_frattini", [](Aut const& a) { return fixes_pointwise(a, frattini(a.group())); })
      .def("__eq__", [](Aut const& x, Aut const& y) { return x == y; })
      .def("__repr__", [](Aut const& a) { return "Aut(" + to_string(a.map()) + ")"; });

  m.def("validate",
        [](FamilyGroup const& G, Elem x, Elem y) -> py::object {
          auto v = validate({G, x, y});
          if (v) return py::cast(*v.aut);
          return py::none();
        },
        py::arg("group"), py::arg("image_a"), py::arg("image_b"),
        "The automorphism a -> image_a, b -> image_b, or None.");
  m.def("why_invalid",
        [](FamilyGroup const& G, Elem x, Elem y) {
          auto v = validate({G, x, y});
          return v ? std::string() : std::string(to_string(v.failure)) + ": " + v.detail;
        });
  m.def("compose", &compose, py::arg("first"), py::arg("second"));
  m.def("inner_from", [](Elem x, FamilyGroup const& G) { return inner_from(x, G); });
  m.def("enumerate_phi_fixing",
        [](FamilyGroup const& G, std::string const& mode, unsigned jobs) {
          return enumerate_phi_fixing(G, enum_opts(mode, jobs));
        },
        py::arg("group"), py::arg("mode") = "pruned", py::arg("jobs") = 1);
  m.def("enumerate_phi_fixing_involutions",
        [](FamilyGroup const& G, std::string const& mode, unsigned jobs) {
          return enumerate_phi_fixing_involutions(G, enum_opts(mode, jobs));
        },
        py::arg("group"), py::arg("mode") = "pruned", py::arg("jobs") = 1);
  m.def("star_condition",
        [](FamilyGroup const& G, std::string const& mode) {
          auto const rep = star_condition(G, enum_opts(mode, 1));
          py::list wit;
          for (auto const& w : rep.noninner_witnesses)
            wit.append(py::make_tuple(w.image_a, w.image_b));
          py::dict d;
          d["star"] = rep.star_holds;
          d["total"] = rep.total;
          d["inner"] = rep.inner_count;
          d["noninner_witnesses"] = wit;
          return d;
        },
        py::arg("group"), py::arg("mode") = "pruned");

  m.def("witness",
        [](std::string const& id, FamilyGroup const& G, int mm, int s) {
          auto const w = witness_map({case_arg(id), mm, s}, G);
          return py::make_tuple(w.image_a, w.image_b);
        },
        py::arg("case"), py::arg("group"), py::arg("m") = 0, py::arg("s") = 0);
  m.def("applicable_cases", [](FamilyGroup const& G) {
    std::vector<std::string> out;
    for (auto id : applicable_cases(G)) out.emplace_back(to_string(id));
    return out;
  });
  m.def("check_witness_json",
        [](std::string const& id, FamilyGroup const& G, int mm, int s) {
          return render(verify_witness({case_arg(id), mm, s}, G), OutputFormat::Json);
        },
        py::arg("case"), py::arg("group"), py::arg("m") = 0, py::arg("s") = 0);
  m.def("phi_f", [](FamilyGroup const& G, Elem fa, Elem fb) { return phi_f({fa, fb}, G); });
  m.def("extend",
        [](FamilyGroup const& G, Elem b1, Elem b2) -> py::object {
          auto r = extend_by_central(G, b1, b2);
          if (r) return py::cast(*r.aut);
          return py::none();
        });
  m.def("varphi_kernel", &varphi_kernel);

  m.def("info_json", [](FamilyGroup const& G) { return render(group_info(G), OutputFormat::Json); });
  m.def("sweep_json",
        [](std::vector<std::string> const& families, std::uint64_t max_order, std::string const& mode,
           unsigned jobs, bool timing) {
          SweepConfig cfg;
          for (auto const& f : families) cfg.families.push_back(family_arg(f));
          cfg.max_order = max_order;
          cfg.mode = enum_opts(mode, 1).mode;
          cfg.jobs = jobs;
          cfg.timing = timing;
          py::gil_scoped_release release;
          return render(run_sweep(cfg), OutputFormat::Json);
        },
        py::arg("families"), py::arg("max_order") = 4096, py::arg("mode") = "pruned",
        py::arg("jobs") = 1, py::arg("timing") = true);
  m.def("oracle_json",
        [](std::uint64_t max_order, std::uint64_t seed, unsigned jobs) {
          OracleConfig cfg;
          cfg.max_order = max_order;
          cfg.seed = seed;
          cfg.jobs = jobs;
          py::gil_scoped_release release;
          return render(run_oracle(cfg), OutputFormat::Json);
        },
        py::arg("max_order") = 512, py::arg("seed") = 1, py::arg("jobs") = 1);
}

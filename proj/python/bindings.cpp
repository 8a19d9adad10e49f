#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jantzen/serialize.hpp"

namespace py = pybind11;
using namespace jantzen;

namespace {

py::object json_to_py(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null: return py::none();
    case Json::value_t::boolean: return py::bool_(j.get<bool>());
    case Json::value_t::number_integer:
    case Json::value_t::number_unsigned: return py::int_(j.get<Int>());
    case Json::value_t::number_float: return py::float_(j.get<double>());
    case Json::value_t::string: return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case Json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default: return py::none();
  }
}

/// Python-facing wrapper; group elements travel as generator words
/// (0 = the affine generator s_{alpha_h,1}, i = s_{alpha_i}).
class PySession {
 public:
  PySession(const std::string& cartan, Int p)
      : sess_(Session::create(CartanType::parse(cartan), p)) {}

  int rank() const { return sess_.rank(); }
  Int p() const { return sess_.p(); }
  Int coxeter_number() const { return sess_.rs().coxeter_number(); }

  std::vector<IntVec> positive_roots() const {
    std::vector<IntVec> out;
    for (const Root& r : sess_.rs().positive_roots()) out.push_back(r.sr);
    return out;
  }

  std::vector<std::pair<IntVec, Int>> simple_generators() const {
    std::vector<std::pair<IntVec, Int>> out;
    for (const Reflection& r : sess_.simple_generators()) out.push_back({r.beta.sr, r.m});
    return out;
  }

  Int length_of(const std::vector<int>& word) const {
    return length(sess_, element_from_word(sess_, word));
  }

  bool is_min_rep_word(const std::vector<int>& word) const {
    return is_min_rep(sess_, element_from_word(sess_, word));
  }

  std::vector<int> reduced(const std::vector<int>& word) const {
    return reduced_word(sess_, element_from_word(sess_, word));
  }

  IntVec p_dot_word(const std::vector<int>& word, const IntVec& lam) const {
    check_weight(lam);
    return p_dot(sess_, element_from_word(sess_, word), Weight{lam}).fw;
  }

  py::object jsf_classical_py(const IntVec& lam) const {
    check_weight(lam);
    return json_to_py(charvec_to_json(jsf_classical(sess_, Weight{lam})));
  }

  py::object jsf_direct_py(const std::vector<int>& word) const {
    return json_to_py(asph_to_json(sess_, jsf_direct(sess_, min_rep(word))));
  }

  py::object jsf_recursive_py(const std::vector<int>& word) const {
    return json_to_py(asph_to_json(sess_, jsf_recursive(sess_, min_rep(word))));
  }

  py::object jsf_py(const IntVec& lam) const {
    check_weight(lam);
    return json_to_py(jsf_result_to_json(sess_, compute_jsf(sess_, Weight{lam})));
  }

  Int asf_pair_regular_py(const std::vector<int>& x, const std::vector<int>& y) const {
    return asf_pair_regular(sess_, min_rep(x), min_rep(y));
  }

  Int asf_pair_singular_py(const IntVec& lam, const IntVec& mu) const {
    check_weight(lam);
    check_weight(mu);
    return asf_pair_singular(sess_, Weight{lam}, Weight{mu});
  }

  py::object bounds_py(const std::vector<int>& word) const {
    return json_to_py(bound_report_to_json(bounds(sess_, min_rep(word))));
  }

  py::object verify_py(int max_length, std::uint64_t seed) const {
    VerifyOptions opts;
    opts.max_length = max_length;
    opts.seed = seed;
    return json_to_py(verify_report_to_json(run_verify(sess_, opts)));
  }

  py::object example_an_py() const { return json_to_py(example_an_to_json(run_example_an(sess_))); }

 private:
  void check_weight(const IntVec& lam) const {
    if (static_cast<int>(lam.size()) != sess_.rank())
      throw std::invalid_argument("weight needs " + std::to_string(sess_.rank()) +
                                  " coordinates");
  }

  AffineElement min_rep(const std::vector<int>& word) const {
    AffineElement x = element_from_word(sess_, word);
    if (!is_min_rep(sess_, x))
      throw std::invalid_argument("word reduces out of the minimal coset representatives");
    return x;
  }

  Session sess_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Jantzen/Andersen sum formulas for Weyl modules via alcove combinatorics";

  m.def("nu_p", &nu_p, py::arg("p"), py::arg("m"), "p-adic valuation of a nonzero integer");

  py::class_<PySession>(m, "Session")
      .def(py::init<const std::string&, Int>(), py::arg("cartan"), py::arg("p"))
      .def_property_readonly("rank", &PySession::rank)
      .def_property_readonly("p", &PySession::p)
      .def_property_readonly("coxeter_number", &PySession::coxeter_number)
      .def("positive_roots", &PySession::positive_roots,
           "positive roots in simple-root coordinates")
      .def("simple_generators", &PySession::simple_generators,
           "affine generators as (root, level) pairs; index 0 is the affine one")
      .def("length", &PySession::length_of, py::arg("word"))
      .def("is_min_rep", &PySession::is_min_rep_word, py::arg("word"))
      .def("reduced_word", &PySession::reduced, py::arg("word"))
      .def("p_dot", &PySession::p_dot_word, py::arg("word"), py::arg("weight"))
      .def("jsf_classical", &PySession::jsf_classical_py, py::arg("weight"))
      .def("jsf_direct", &PySession::jsf_direct_py, py::arg("word"))
      .def("jsf_recursive", &PySession::jsf_recursive_py, py::arg("word"))
      .def("jsf", &PySession::jsf_py, py::arg("weight"),
           "classical JSF plus the anti-spherical comparison for p-regular weights")
      .def("asf_pair_regular", &PySession::asf_pair_regular_py, py::arg("x_word"),
           py::arg("y_word"))
      .def("asf_pair_singular", &PySession::asf_pair_singular_py, py::arg("lam"), py::arg("mu"))
      .def("bounds", &PySession::bounds_py, py::arg("word"))
      .def("verify", &PySession::verify_py, py::arg("max_length") = -1, py::arg("seed") = 0)
      .def("example_an", &PySession::example_an_py);
}

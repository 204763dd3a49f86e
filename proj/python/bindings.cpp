#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "origami/commands.hpp"
#include "origami/fixtures.hpp"

namespace py = pybind11;
using namespace origami;

namespace {

// Results cross the boundary as JSON text; the Python package decodes them.
py::tuple result(const CommandResult& r) { return py::make_tuple(r.output.dump(), static_cast<int>(r.exit_code)); }

Origami origami_from(const std::string& input_json) { return to_origami(parse_origami_input(Json::parse(input_json))); }

IntMatrix matrix_from(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == m.cols(), ErrorCode::ShapeMismatch, "ragged matrix");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Kontsevich-Zorich monodromy of square-tiled surfaces";
  m.attr("__version__") = kToolVersion;

  // OrigamiError(message, code, exit_code)
  static py::handle error_type = py::exception<Error>(m, "OrigamiError").release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::tuple args = py::make_tuple(e.what(), std::string(to_string(e.code())),
                                      static_cast<int>(exit_code_for(e.code())));
      PyErr_SetObject(error_type.ptr(), args.ptr());
    }
  });

  m.def("analyze", [](const std::string& input, const std::vector<std::array<long, 2>>& directions) {
    AnalyzeOptions opt;
    if (!directions.empty()) opt.directions = directions;
    return result(cmd_analyze(origami_from(input), opt));
  }, py::arg("input_json"), py::arg("directions") = std::vector<std::array<long, 2>>{});

  m.def("monodromy", [](const std::string& input) { return result(cmd_monodromy(origami_from(input))); },
        py::arg("input_json"));

  m.def("certify", [](const std::string& input, bool density, bool arithmeticity, bool congruence_mod2,
                      std::optional<std::string> pinching_word, std::optional<std::string> unipotent_word,
                      std::optional<std::string> transvection_word) {
    CertifyOptions opt;
    opt.density = density;
    opt.arithmeticity = arithmeticity;
    opt.congruence_mod2 = congruence_mod2;
    opt.pinching_word = pinching_word;
    opt.unipotent_word = unipotent_word;
    opt.transvection_word = transvection_word;
    return result(cmd_certify(origami_from(input), opt));
  }, py::arg("input_json"), py::arg("density") = true, py::arg("arithmeticity") = true,
        py::arg("congruence_mod2") = true, py::arg("pinching_word") = py::none(),
        py::arg("unipotent_word") = py::none(), py::arg("transvection_word") = py::none());

  m.def("lyapunov", [](const std::string& input, std::size_t iterations, std::size_t trials, std::uint64_t seed,
                       unsigned threads) {
    LyapunovCommandOptions opt;
    opt.estimate.iterations = iterations;
    opt.estimate.trials = trials;
    opt.estimate.seed = seed;
    opt.estimate.threads = threads;
    py::gil_scoped_release release;
    return cmd_lyapunov(origami_from(input), opt).output.dump();
  }, py::arg("input_json"), py::arg("iterations") = 32768, py::arg("trials") = 32,
        py::arg("seed") = LyapunovOptions{}.seed, py::arg("threads") = 0);

  m.def("census", [](std::size_t max_squares) {
    py::gil_scoped_release release;
    return cmd_census(max_squares).output.dump();
  }, py::arg("max_squares"));

  m.def("char_poly", [](const std::vector<std::vector<long>>& rows) {
    return encode(char_poly(matrix_from(rows))).dump();
  }, py::arg("matrix"));

  m.def("reference_fixtures_json", [] { return reference_fixtures_json(); });
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "alonzo/cli.hpp"
#include "alonzo/corpus.hpp"
#include "alonzo/model.hpp"

namespace py = pybind11;
using namespace alonzo;

namespace {

using Sources = std::map<std::string, std::string>;

// Commands read `sources` first, then the bundled corpus, then the disk.
Inputs make_inputs(const std::vector<std::string>& paths, const Sources& sources, bool corpus) {
  FileReader disk = disk_reader();
  FileReader mem = [sources, disk](const std::string& p) -> std::optional<std::string> {
    if (auto it = sources.find(p); it != sources.end()) return it->second;
    return disk(p);
  };
  return Inputs{paths, corpus, corpus_reader(mem)};
}

const Theory& bundled(const std::string& name) { return load_corpus().graph().theory(name); }

Expr parse_in(const std::string& text, const Theory& t) {
  return parse_expr(text, t.vocabulary(), t.notations());
}

}  // namespace

PYBIND11_MODULE(_alonzo, m) {
  m.doc() = "Alonzo theories, morphisms and finite models";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(PyExc_ValueError, (std::string(error_code_name(e.code())) + ": " + e.what()).c_str());
    }
  });

  py::class_<CommandResult>(m, "CommandResult")
      .def_readonly("exit_code", &CommandResult::exit_code)
      .def_readonly("out", &CommandResult::out)
      .def_readonly("err", &CommandResult::err)
      .def("__repr__", [](const CommandResult& r) {
        return "<CommandResult exit_code=" + std::to_string(r.exit_code) + ">";
      });

  m.def(
      "check",
      [](const std::vector<std::string>& paths, const Sources& sources, bool corpus) {
        return cmd_check(make_inputs(paths, sources, corpus));
      },
      py::arg("paths") = std::vector<std::string>{}, py::arg("sources") = Sources{}, py::arg("corpus") = false);

  m.def(
      "transport",
      [](const std::string& via, const std::string& item, std::optional<std::string> as,
         const std::vector<std::string>& paths, const Sources& sources, bool corpus) {
        TransportOptions opts{via, item, std::move(as), false};
        return cmd_transport(make_inputs(paths, sources, corpus), opts);
      },
      py::arg("via"), py::arg("item"), py::arg("as_") = py::none(), py::arg("paths") = std::vector<std::string>{},
      py::arg("sources") = Sources{}, py::arg("corpus") = true);

  m.def(
      "render",
      [](std::optional<std::string> theory, bool latex, const std::vector<std::string>& paths,
         const Sources& sources, bool corpus) {
        return cmd_render(make_inputs(paths, sources, corpus), RenderOptions{latex, std::move(theory)});
      },
      py::arg("theory") = py::none(), py::arg("latex") = false, py::arg("paths") = std::vector<std::string>{},
      py::arg("sources") = Sources{}, py::arg("corpus") = true);

  m.def(
      "countermodel",
      [](const std::string& conjecture, std::optional<std::string> theory, int max_size,
         const std::vector<std::string>& paths, const Sources& sources, bool corpus) {
        CountermodelOptions opts;
        opts.conjecture = conjecture;
        opts.theory = std::move(theory);
        opts.max_size = max_size;
        return cmd_countermodel(make_inputs(paths, sources, corpus), opts);
      },
      py::arg("conjecture"), py::arg("theory") = py::none(), py::arg("max_size") = 3,
      py::arg("paths") = std::vector<std::string>{}, py::arg("sources") = Sources{}, py::arg("corpus") = true);

  m.def(
      "graph_stats",
      [](std::optional<std::string> graph, const std::vector<std::string>& paths, const Sources& sources,
         bool corpus) {
        return cmd_graph_stats(make_inputs(paths, sources, corpus), GraphStatsOptions{std::move(graph), true});
      },
      py::arg("graph") = py::none(), py::arg("paths") = std::vector<std::string>{}, py::arg("sources") = Sources{},
      py::arg("corpus") = true);

  m.def("theories", [] {
    std::vector<std::string> out;
    for (const auto& [name, t] : load_corpus().graph().theories()) out.push_back(name);
    return out;
  });

  m.def(
      "type_of",
      [](const std::string& text, const std::string& theory) {
        const Theory& t = bundled(theory);
        return type_of(parse_in(text, t), t.vocabulary()).to_string();
      },
      py::arg("text"), py::arg("theory"));

  m.def(
      "compact",
      [](const std::string& text, const std::string& theory) {
        const Theory& t = bundled(theory);
        return print_compact(parse_in(text, t), t.notations());
      },
      py::arg("text"), py::arg("theory"));

  m.def(
      "latex",
      [](const std::string& text, const std::string& theory) {
        const Theory& t = bundled(theory);
        return print_latex(parse_in(text, t), t.notations());
      },
      py::arg("text"), py::arg("theory"));

  m.def(
      "holds_in",
      [](const std::string& model_text, const std::string& sentence, const std::string& theory) {
        const Theory& t = bundled(theory);
        FiniteModel model = parse_model(model_text, t);
        Expr s = t.find_axiom(sentence)     ? t.find_axiom(sentence)->sentence
                 : t.find_theorem(sentence) ? t.find_theorem(sentence)->sentence
                                            : parse_in(sentence, t);
        return check_sentence(t, model, s).value;
      },
      py::arg("model"), py::arg("sentence"), py::arg("theory") = "MON");

  m.def(
      "bundled_file", [](const std::string& path) { return corpus_reader()(path); }, py::arg("path"));
}

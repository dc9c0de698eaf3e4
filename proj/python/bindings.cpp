#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pdgaps/census.hpp"
#include "pdgaps/doubling.hpp"
#include "pdgaps/envelope.hpp"
#include "pdgaps/error.hpp"
#include "pdgaps/gaps.hpp"
#include "pdgaps/verify.hpp"

namespace py = pybind11;
using namespace pdgaps;

namespace {

// Words cross the boundary as plain strings; "" and "eps" both mean the empty word.
Word word(const std::string& text) { return text.empty() ? Word{} : Word::parse(text); }
std::string text(const Word& w) { return std::string(w.str()); }

ThetaId theta(int id) {
    if (id != 1 && id != 2) throw InvalidArgument("gap sequence id must be 1 or 2");
    return id == 1 ? ThetaId::Theta1 : ThetaId::Theta2;
}

py::tuple env_tuple(const EnvelopeId& id) { return py::make_tuple(id.m(), id.i()); }

py::dict extension_dict(const EnvelopeExtension& ext) {
    py::dict d;
    d["env"] = env_tuple(ext.env);
    d["mu1"] = text(ext.mu1);
    d["mu2"] = text(ext.mu2);
    d["factor"] = text(ext.factor);
    return d;
}

}  // namespace

PYBIND11_MODULE(pdgaps, m) {
    m.doc() = "Envelope words and gap sequences of the period-doubling sequence";

    static py::exception<Error> base_error(m, "Error");
    static py::exception<NotAFactor> not_a_factor(m, "NotAFactorError", base_error.ptr());
    static py::exception<BudgetExceeded> budget(m, "BudgetExceededError", base_error.ptr());
    static py::exception<InternalError> internal(m, "InternalError", base_error.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const NotAFactor& e) {
            not_a_factor(e.what());
        } catch (const BudgetExceeded& e) {
            budget(e.what());
        } catch (const InternalError& e) {
            internal(e.what());
        } catch (const InvalidArgument& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    py::class_<Gap>(m, "Gap")
        .def_property_readonly("kind", [](const Gap& g) { return to_string(g.kind()); })
        .def_property_readonly("body", [](const Gap& g) { return text(g.body()); })
        .def_property_readonly("signed_length", &Gap::signed_length)
        .def("__eq__", [](const Gap& a, const Gap& b) { return a == b; })
        .def("__str__", [](const Gap& g) { return to_string(g); })
        .def("__repr__", [](const Gap& g) { return "Gap('" + to_string(g) + "')"; });
    m.def("parse_gap", [](const std::string& s) { return parse_gap(s); });

    m.def("substitute", [](const std::string& w) { return text(substitute(word(w))); });
    m.def("prefix", [](Index n) { return text(prefix(n)); }, py::arg("n"));
    m.def("letter_at", [](Index i) { return std::string(1, to_char(letter_at(i))); }, py::arg("i"));
    m.def("block", [](const std::string& kind, int exponent) {
        if (kind != "A" && kind != "B") throw InvalidArgument("block kind must be 'A' or 'B'");
        return text(block(kind == "A" ? BlockKind::A : BlockKind::B, exponent));
    }, py::arg("kind"), py::arg("m"));
    m.def("delta", [](int k) { return std::string(1, to_char(delta(k))); });

    m.def("envelope_word", [](int mm, int i) { return text(envelope_word(EnvelopeId{mm, i})); }, py::arg("m"), py::arg("i"));
    m.def("env_of", [](const std::string& w) { return env_tuple(env_of(word(w))); });
    m.def("extension_of", [](const std::string& w) { return extension_dict(extension_of(word(w))); });
    m.def("is_factor_of_sequence", [](const std::string& w) { return is_factor_of_sequence(word(w)); });

    m.def("theta_prefix", [](int id, Index n) { return theta_prefix(theta(id), n); }, py::arg("id"), py::arg("n"));
    m.def("classify", [](const std::string& w) { return to_string(classify(word(w))); });
    m.def("gap_of", [](const std::string& w, Index p) { return gap_of(word(w), p); }, py::arg("w"), py::arg("p"));
    m.def("gap0_of", [](const std::string& w) { return text(gap0_of(word(w))); });
    m.def("gap_sequence", [](const std::string& w, Index n) {
        py::list out;
        for (const auto& rg : gap_sequence(word(w), n)) out.append(py::make_tuple(to_string(rg.role), rg.gap));
        return out;
    }, py::arg("w"), py::arg("n"));
    m.def("relation_at", [](const std::string& w, Index p) { return to_string(relation_at(word(w), p)); });

    m.def("letter_count", [](int id, const std::string& letter, Index p) {
        if (letter.size() != 1) throw InvalidArgument("letter must be a single character");
        return letter_count(theta(id), letter[0], p);
    }, py::arg("id"), py::arg("letter"), py::arg("p"));
    m.def("position_envelope", [](int mm, int i, Index p) { return position_envelope(EnvelopeId{mm, i}, p); },
          py::arg("m"), py::arg("i"), py::arg("p"));
    m.def("position_of", [](const std::string& w, Index p) { return position_of(word(w), p); }, py::arg("w"), py::arg("p"));
    m.def("palindrome_census", &palindrome_census, py::arg("n"));
    m.def("square_census", &square_census, py::arg("N"));
    m.def("cube_census", &cube_census, py::arg("N"));
    m.def("squares_beginning_at", [](Index pos) {
        std::vector<std::string> out;
        for (const auto& w : squares_beginning_at(pos)) out.push_back(text(w));
        return out;
    });

    m.def("sweep", [](Index max_len, Index max_p, int prefix_pow, std::vector<std::string> suites, unsigned threads) {
        SweepConfig cfg;
        cfg.max_factor_len = max_len;
        cfg.max_gap_index = max_p;
        cfg.prefix_exponent = prefix_pow;
        cfg.threads = threads;
        for (const auto& s : suites) cfg.suites.push_back(parse_suite(s));
        SweepReport report;
        {
            py::gil_scoped_release release;
            report = sweep(cfg);
        }
        py::list divergences;
        for (const auto& d : report.divergences) {
            divergences.append(py::dict(py::arg("claim") = to_string(d.claim), py::arg("witness") = d.witness,
                                        py::arg("expected") = d.expected, py::arg("actual") = d.actual));
        }
        return py::dict(py::arg("divergences") = divergences, py::arg("complete") = report.complete,
                        py::arg("factors_checked") = report.factors_checked,
                        py::arg("pairs_checked") = report.pairs_checked);
    }, py::arg("max_len") = 16, py::arg("max_p") = 20, py::arg("prefix_pow") = 12,
       py::arg("suites") = std::vector<std::string>{"gap_pattern", "gaps", "positions", "uniqueness"},
       py::arg("threads") = 1u);
}

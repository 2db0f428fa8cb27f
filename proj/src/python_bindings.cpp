// Python module _hooktab. Tableaux cross the boundary in the text format.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hooktab/enumeration.hpp"
#include "hooktab/errors.hpp"
#include "hooktab/genfun.hpp"
#include "hooktab/mixed_tableau.hpp"
#include "hooktab/switching.hpp"
#include "hooktab/text_format.hpp"
#include "hooktab/uncrowding.hpp"
#include "hooktab/verify.hpp"

namespace py = pybind11;
using namespace hooktab;

namespace {

std::vector<std::string> serialize_all(const auto& ts) {
    std::vector<std::string> out;
    for (const auto& t : ts) out.push_back(serialize(t));
    return out;
}

Partition partition(const std::vector<int>& parts) { return Partition(parts); }

py::dict validate(const std::string& text) {
    const auto v = validate_hvt_rows(parse_hvt_rows(text));
    std::vector<std::string> violations;
    for (const auto& x : v.violations) violations.push_back(x.to_string());
    py::dict d;
    d["valid"] = v.ok();
    d["violations"] = violations;
    if (v.ok()) {
        d["shape"] = std::vector<int>(v.tableau->shape().parts().begin(), v.tableau->shape().parts().end());
        d["weight"] = weight_hvt(*v.tableau).to_string();
    }
    return d;
}

py::dict classify(const std::string& text) {
    const auto t = parse_mixed(text);
    const auto f = classify_mixed(t);
    py::dict d;
    d["alpha_column_strict"] = f.alpha_column_strict;
    d["alpha_row_strict"] = f.alpha_row_strict;
    d["beta_column_strict"] = f.beta_column_strict;
    d["beta_row_strict"] = f.beta_row_strict;
    d["totally_column_strict"] = f.totally_column_strict;
    d["sorted_alpha_beta"] = f.sorted_alpha_beta;
    d["sorted_beta_alpha"] = f.sorted_beta_alpha;
    d["flagged_mixed"] = f.flagged_mixed;
    return d;
}

std::pair<std::string, std::string> to_pair(const UncrowdResult& u) {
    return {serialize(u.insertion), serialize(u.recording)};
}

}  // namespace

PYBIND11_MODULE(_hooktab, m) {
    m.doc() = "Hook-valued tableaux, uncrowding and switching";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<InvalidTableau>(m, "InvalidTableau", PyExc_ValueError);
    py::register_exception<PreconditionViolation>(m, "PreconditionViolation", PyExc_ValueError);
    py::register_exception<CapTooSmall>(m, "CapTooSmall", PyExc_ValueError);

    m.def("validate", &validate, py::arg("text"));
    m.def("normalize", [](const std::string& text) { return serialize(parse_hvt(text)); }, py::arg("text"));
    m.def("weight", [](const std::string& text) { return weight_hvt(parse_hvt(text)).to_string(); },
          py::arg("text"));

    m.def("uncrowd", [](const std::string& text, const std::string& word) {
        return to_pair(uncrowd(parse_hvt(text), UncrowdWord::parse(word)));
    }, py::arg("text"), py::arg("word"));
    m.def("uncrowd_canonical", [](const std::string& text, const std::string& order) {
        if (order != "LA" && order != "AL") throw py::value_error("order must be LA or AL");
        return to_pair(uncrowd_canonical(parse_hvt(text), order == "LA" ? CanonicalOrder::LA : CanonicalOrder::AL));
    }, py::arg("text"), py::arg("order") = "LA");
    m.def("phi", [](const std::string& text) {
        const auto [p, e] = phi(parse_hvt(text));
        return std::make_pair(serialize(p), serialize(e));
    }, py::arg("text"));

    m.def("classify_mixed", &classify, py::arg("text"));
    m.def("is_exquisite", [](const std::string& text) { return is_exquisite(parse_mixed(text)); }, py::arg("text"));
    m.def("is_biflagged", [](const std::string& text) { return is_biflagged(parse_mixed(text)); }, py::arg("text"));
    m.def("c_beta_shift", [](const std::string& text, int sign) {
        return serialize(c_beta_shift(parse_mixed(text), sign >= 0 ? ShiftSign::plus : ShiftSign::minus));
    }, py::arg("text"), py::arg("sign") = 1);

    m.def("shuffle", [](const std::string& text) { return serialize(shuffle(parse_mixed(text))); }, py::arg("text"));
    m.def("fully_switch", [](const std::string& text, std::optional<std::uint64_t> seed) {
        const auto s = seed ? SwitchStrategy::random(*seed) : SwitchStrategy::deterministic();
        return serialize(fully_switch(parse_mixed(text), s));
    }, py::arg("text"), py::arg("seed") = py::none());
    m.def("gg_jdt", [](const std::string& text) { return serialize(gg_jdt(parse_mixed(text))); }, py::arg("text"));

    m.def("enum_ssyt", [](const std::vector<int>& mu, int n) { return serialize_all(enum_ssyt(partition(mu), n)); },
          py::arg("mu"), py::arg("n"));
    m.def("enum_hvt", [](const std::vector<int>& lambda, int n, int excess) {
        return serialize_all(enum_hvt(partition(lambda), {n, excess}));
    }, py::arg("lambda_"), py::arg("n"), py::arg("excess"));
    m.def("enum_exquisite", [](const std::vector<int>& outer, const std::vector<int>& inner) {
        return serialize_all(enum_exquisite(SkewShape(partition(outer), partition(inner))));
    }, py::arg("outer"), py::arg("inner"));
    m.def("enum_biflagged", [](const std::vector<int>& outer, const std::vector<int>& inner) {
        return serialize_all(enum_biflagged(SkewShape(partition(outer), partition(inner))));
    }, py::arg("outer"), py::arg("inner"));

    m.def("hvt_genfun", [](const std::vector<int>& lambda, int n, int excess) {
        const Partition l = partition(lambda);
        return hvt_genfun(l, {n, excess}, l.size() + excess).to_string();
    }, py::arg("lambda_"), py::arg("n"), py::arg("excess"));
    m.def("identity_holds", [](const std::vector<int>& lambda, int n, int excess) {
        const Partition l = partition(lambda);
        const EnumBounds b{n, excess};
        const int cap = l.size() + excess;
        const auto g = hvt_genfun(l, b, cap);
        return g == schur_expansion_genfun(l, b, cap, CoefficientModel::EXQ) &&
               g == schur_expansion_genfun(l, b, cap, CoefficientModel::BFT);
    }, py::arg("lambda_"), py::arg("n"), py::arg("excess"));

    m.def("check_ids", &check_ids);
    m.def("verify_json", [](const std::string& id, const std::vector<int>& lambda, int n, int excess, int max_outer,
                            int max_index, int strategies, std::uint64_t seed, int jobs, bool timing) {
        VerifyOptions o;
        o.lambda = partition(lambda);
        o.bounds = {n, excess};
        o.max_outer = max_outer;
        o.max_index = max_index;
        o.strategies = strategies;
        o.seed = seed;
        o.jobs = jobs;
        py::gil_scoped_release release;
        return verify(id, o).to_json(timing);
    }, py::arg("check_id"), py::arg("lambda_") = std::vector<int>{}, py::arg("n") = 3, py::arg("excess") = 2,
       py::arg("max_outer") = 6, py::arg("max_index") = 4, py::arg("strategies") = 100, py::arg("seed") = 0,
       py::arg("jobs") = 1, py::arg("timing") = true);
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "betafam/closedform.hpp"
#include "betafam/repro.hpp"
#include "betafam/search.hpp"

namespace py = pybind11;
using namespace betafam;

namespace {

py::object coeff_to_py(const Int& c)
{
    // route through the decimal string so arbitrary precision survives
    return py::int_(py::str(c.get_str()));
}

py::list terms_to_py(const Level1Form& f)
{
    py::list out;
    for (const auto& t : f.terms())
        out.append(py::make_tuple(t.delta_exp, t.e4_exp, coeff_to_py(t.coeff)));
    return out;
}

py::dict report_to_py(const ConditionReport& rep)
{
    py::dict c2;
    c2["pass"] = rep.c2;
    c2["twelve_ord_q"] = 12 * rep.c2_witness.ord_q;
    c2["bound"] = rep.c2_witness.bound;
    c2["equality_branch"] = rep.c2_witness.equality_branch;
    py::dict c4;
    c4["status"] = std::string(to_string(rep.c4));
    if (rep.c4 == C4Status::inapplicable)
        c4["order"] = py::none();
    else
        c4["order"] = rep.c4_witness.order ? py::object(py::int_(*rep.c4_witness.order))
                                           : py::object(py::str("infinite"));
    c4["required_j"] = rep.c4_witness.required_j;
    py::dict out;
    out["c1"] = rep.c1;
    out["c2"] = c2;
    out["c3"] = rep.c3;
    out["c4"] = c4;
    out["generator_check"] = rep.generator_check;
    out["failed_stage"] = rep.failed_stage;
    out["all_passed"] = rep.all_passed();
    return out;
}

py::dict form_result(const Level1Form& f, const ConditionReport& rep)
{
    py::dict out;
    out["weight"] = f.weight;
    out["basis_terms"] = terms_to_py(f);
    out["conditions"] = report_to_py(rep);
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "modular forms attached to order-p divided beta family elements";

    m.def("a_seq", &a_seq, py::arg("p"), py::arg("n"));
    m.def("is_order_p", &is_order_p, py::arg("p"), py::arg("i"), py::arg("j"));
    m.def("enumerate_j", &enumerate_j, py::arg("p"), py::arg("i"));

    m.def(
        "bernoulli",
        [](std::uint64_t t) {
            Rat b = bernoulli(t);
            return py::make_tuple(coeff_to_py(Int(b.get_num())), coeff_to_py(Int(b.get_den())));
        },
        py::arg("t"), "Bernoulli number B_t as a (numerator, denominator) pair");

    m.def(
        "eisenstein_coeffs",
        [](std::uint64_t t, std::size_t n) {
            QSeriesQ e = eisenstein_q(t, n);
            py::list out;
            for (std::size_t k = 0; k <= n; ++k)
                out.append(py::make_tuple(coeff_to_py(Int(e[k].get_num())),
                                          coeff_to_py(Int(e[k].get_den()))));
            return out;
        },
        py::arg("t"), py::arg("n"), "q-coefficients of E_t through q^n as rational pairs");

    m.def(
        "delta_coeffs",
        [](std::size_t n) {
            QSeriesZ d = delta_z(n);
            py::list out;
            for (std::size_t k = 0; k <= n; ++k)
                out.append(coeff_to_py(d[k]));
            return out;
        },
        py::arg("n"), "q-coefficients of Delta through q^n");

    m.def(
        "theorem_form",
        [](std::uint64_t i, std::uint64_t j, bool allow_nonfamily) {
            auto [form, tag] = theorem_main_5(i, j, allow_nonfamily);
            py::dict out = form_result(form, check_all(form, 5, i, j));
            const char* branch = tag.branch == CaseTag::Branch::pure_delta ? "pure-delta"
                                 : tag.branch == CaseTag::Branch::full_sum ? "full-sum"
                                                                           : "trimmed-sum";
            out["branch"] = branch;
            if (tag.u)
                out["u"] = *tag.u;
            return out;
        },
        py::arg("i"), py::arg("j"), py::arg("allow_nonfamily") = false,
        "closed-form f_{i/j} at p = 5 with its condition report");

    m.def(
        "section5_form",
        [](std::uint64_t p, std::uint64_t r, std::uint64_t n, std::uint64_t j) {
            Level1Form f = section5_form(p, r, n);
            std::uint64_t i = r;
            for (std::uint64_t k = 0; k < n; ++k)
                i *= p;
            return form_result(f, check_all(f, p, i, j));
        },
        py::arg("p"), py::arg("r"), py::arg("n"), py::arg("j") = 1,
        "Delta-power form at p in {7, 11, 13, 677} with its condition report");

    m.def(
        "search_solve",
        [](std::uint64_t p, std::uint64_t i, std::uint64_t j, bool allow_nonfamily) {
            SolveResult r = search_solve(p, i, j, allow_nonfamily);
            py::dict out;
            const char* status = r.status == SolveResult::Status::solved ? "solved"
                                 : r.status == SolveResult::Status::no_solution ? "no-solution"
                                 : r.status == SolveResult::Status::postcondition_failure
                                     ? "postcondition-failure"
                                     : "unsupported";
            out["status"] = status;
            out["detail"] = r.detail;
            out["M"] = r.problem.M;
            if (r.status == SolveResult::Status::solved ||
                r.status == SolveResult::Status::postcondition_failure) {
                out["coeffs"] = r.coeffs;
                py::dict fr = form_result(r.form, r.report);
                for (auto item : fr)
                    out[item.first] = item.second;
            }
            return out;
        },
        py::arg("p"), py::arg("i"), py::arg("j"), py::arg("allow_nonfamily") = false,
        "solve for f_{i/j} by the coefficient-determination procedure");

    m.def(
        "divisibility_table",
        [](std::uint64_t i, std::uint64_t m_lo, std::uint64_t m_hi) {
            py::list out;
            for (const auto& v : divisibility_table(i, m_lo, m_hi))
                out.append(v ? py::object(py::int_(*v)) : py::object(py::str("infinite")));
            return out;
        },
        py::arg("i"), py::arg("m_lo"), py::arg("m_hi"),
        "exact E4-divisibility orders of L2(Delta^(2i-m) E4^(3m)) mod 5");

    m.def(
        "eisenstein_level1",
        [](std::uint64_t p) {
            HomogE4E6 h = homog_from_ee6(eisenstein_rep_mod_p(p));
            py::list out;
            for (std::size_t s = 0; s < h.c.size(); ++s)
                if (h.c[s])
                    out.append(py::make_tuple(h.e4_exp(s), h.e6_exp(s), h.c[s]));
            return out;
        },
        py::arg("p"), "E_{p-1} mod p as (e4_exp, e6_exp, coeff) terms");

    m.def(
        "eisenstein_level2",
        [](std::uint64_t p) {
            const Level2PolyP& rep = default_eisenstein_cache().rep(p);
            py::dict out;
            out["delta_parity"] = rep.delta_parity;
            out["mu_ascending"] = rep.mu;
            return out;
        },
        py::arg("p"), "E_{p-1} mod p in the (mu, eps) generators, ascending mu-degree");

    m.def(
        "reproduce",
        [](const std::string& id) {
            const ReproItem* item = find_repro_item(id);
            if (!item)
                throw std::domain_error("unknown reproduction item: " + id);
            ReproResult r = item->run(default_eisenstein_cache());
            return py::make_tuple(r.pass, r.detail);
        },
        py::arg("id"), "run one reproduction item; returns (pass, detail)");

    m.def("repro_ids", [] {
        py::list out;
        for (const auto& item : repro_items())
            out.append(item.id);
        return out;
    });
}

#include "covercount/json_io.hpp"

#include "covercount/errors.hpp"

namespace covercount {

Json partition_to_json(const Partition& nu) {
    Json arr = Json::array();
    for (unsigned p : nu.parts()) arr.push_back(p);
    return arr;
}

Partition partition_from_json(const Json& j) {
    std::vector<unsigned> parts;
    for (const auto& v : j) parts.push_back(v.get<unsigned>());
    return Partition(std::move(parts));
}

Json mpoly_to_json(const MPoly& p) {
    Json arr = Json::array();
    for (const std::string& s : p.coeff_strings()) arr.push_back(s);
    return arr;
}

MPoly mpoly_from_json(const Json& j) {
    std::vector<std::string> coeffs;
    for (const auto& v : j) coeffs.push_back(v.get<std::string>());
    return MPoly::parse_coeff_strings(coeffs);
}

Json hpoly_to_json(const HPoly& p) {
    Json obj = Json::object();
    for (const auto& [e, c] : p.terms()) obj[std::to_string(e)] = mpoly_to_json(c);
    return obj;
}

HPoly hpoly_from_json(const Json& j, HWindow window) {
    HPoly p(window);
    for (auto it = j.begin(); it != j.end(); ++it)
        p += HPoly::monomial(window, std::stoi(it.key()), mpoly_from_json(it.value()));
    return p;
}

Json pseries_to_json(const PSeries& s) {
    Json arr = Json::array();
    for (const auto& [mu, c] : s.terms())
        arr.push_back(Json{{"mu", partition_to_json(mu)}, {"coeff", hpoly_to_json(c)}});
    return arr;
}

PSeries pseries_from_json(const Json& j, unsigned weight_bound, HWindow window) {
    PSeries s(weight_bound, window);
    for (const auto& term : j)
        s.add_term(partition_from_json(term.at("mu")),
                   hpoly_from_json(term.at("coeff"), window));
    return s;
}

Json genfunction_to_json(const GenFunction& gf) {
    Json terms = Json::array();
    for (unsigned g = 0; g <= gf.genus_bound; ++g) {
        for (const auto& [mu, c] : gf.series.terms()) {
            const MPoly coeff = c.coeff(2 * static_cast<int>(g));
            if (coeff.is_zero()) continue;
            terms.push_back(Json{{"genus", g},
                                 {"mu", partition_to_json(mu)},
                                 {"m_poly", mpoly_to_json(coeff)}});
        }
    }
    return Json{{"weight_bound", gf.weight_bound},
                {"genus_bound", gf.genus_bound},
                {"terms", terms}};
}

GenFunction genfunction_from_json(const Json& j) {
    GenFunction gf;
    gf.weight_bound = j.at("weight_bound").get<unsigned>();
    gf.genus_bound = j.at("genus_bound").get<unsigned>();
    const HWindow window{0, 2 * static_cast<int>(gf.genus_bound)};
    gf.series = PSeries(gf.weight_bound, window);
    for (const auto& term : j.at("terms")) {
        const unsigned g = term.at("genus").get<unsigned>();
        gf.series.add_term(partition_from_json(term.at("mu")),
                           HPoly::monomial(window, 2 * static_cast<int>(g),
                                           mpoly_from_json(term.at("m_poly"))));
    }
    return gf;
}

Json count_table_to_json(const CountTable& t) {
    Json arr = Json::array();
    for (const auto& [key, count] : t.cells)
        arr.push_back(Json{{"nu", partition_to_json(key.first)},
                           {"genus", key.second},
                           {"count", count.str()}});
    return arr;
}

CountTable count_table_from_json(const Json& j) {
    CountTable t;
    for (const auto& cell : j)
        t.cells.emplace(std::make_pair(partition_from_json(cell.at("nu")),
                                       cell.at("genus").get<unsigned>()),
                        Rat::parse(cell.at("count").get<std::string>()));
    return t;
}

Json kp_report_to_json(const std::vector<KPResidual>& residuals) {
    Json arr = Json::array();
    for (const KPResidual& r : residuals) {
        Json entry{{"form", r.form_id},
                   {"vanishes_through_weight", r.vanishes_through_weight},
                   {"first_nonzero_term", nullptr}};
        if (r.first_nonzero) {
            entry["first_nonzero_term"] = Json{{"mu", partition_to_json(r.first_nonzero->mu)},
                                               {"hbar_exp", r.first_nonzero->hbar_exp},
                                               {"m_poly", mpoly_to_json(r.first_nonzero->coeff)}};
        }
        arr.push_back(std::move(entry));
    }
    return arr;
}

std::vector<KPReportRow> kp_report_from_json(const Json& j) {
    std::vector<KPReportRow> rows;
    for (const auto& entry : j) {
        KPReportRow row;
        row.form_id = entry.at("form").get<std::string>();
        row.vanishes_through_weight = entry.at("vanishes_through_weight").get<int>();
        const Json& term = entry.at("first_nonzero_term");
        if (!term.is_null())
            row.first_nonzero =
                KPResidual::Term{partition_from_json(term.at("mu")),
                                 term.at("hbar_exp").get<int>(),
                                 mpoly_from_json(term.at("m_poly"))};
        rows.push_back(std::move(row));
    }
    return rows;
}

Json conjecture_report_to_json(const std::vector<ConjectureReport>& reports) {
    Json arr = Json::array();
    for (const ConjectureReport& r : reports) {
        Json entry{{"nu", partition_to_json(r.nu)},
                   {"divisor", mpoly_to_json(r.divisor)},
                   {"divisible", r.divisible},
                   {"degree_bound", r.degree_bound},
                   {"degree_bound_ok", r.degree_bound_ok}};
        entry["quotient"] = r.divisible ? mpoly_to_json(r.quotient) : Json(nullptr);
        entry["quotient_degree"] = r.divisible ? Json(r.quotient_degree) : Json(nullptr);
        arr.push_back(std::move(entry));
    }
    return arr;
}

std::vector<ConjectureReport> conjecture_report_from_json(const Json& j) {
    std::vector<ConjectureReport> out;
    for (const auto& entry : j) {
        ConjectureReport r;
        r.nu = partition_from_json(entry.at("nu"));
        r.divisor = mpoly_from_json(entry.at("divisor"));
        r.divisible = entry.at("divisible").get<bool>();
        if (r.divisible) {
            r.quotient = mpoly_from_json(entry.at("quotient"));
            r.quotient_degree = entry.at("quotient_degree").get<int>();
        }
        r.degree_bound = entry.at("degree_bound").get<int>();
        r.degree_bound_ok = entry.at("degree_bound_ok").get<bool>();
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace covercount

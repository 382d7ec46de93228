#pragma once

#include <json.hpp>

#include "covercount/analysis.hpp"
#include "covercount/genseries.hpp"
#include "covercount/oracle.hpp"

namespace covercount {

using Json = nlohmann::json;

Json partition_to_json(const Partition& nu);
Partition partition_from_json(const Json& j);

Json mpoly_to_json(const MPoly& p);
MPoly mpoly_from_json(const Json& j);

Json hpoly_to_json(const HPoly& p);
HPoly hpoly_from_json(const Json& j, HWindow window);

/// Array of {"mu": [...], "coeff": {"<hbar exponent>": [coeff strings]}}
/// sorted by (weight, reverse-lex mu).
Json pseries_to_json(const PSeries& s);
PSeries pseries_from_json(const Json& j, unsigned weight_bound, HWindow window);

/// {"weight_bound": N, "genus_bound": G, "terms": [{"genus", "mu", "m_poly"}]}
/// sorted by (genus, weight, reverse-lex mu).
Json genfunction_to_json(const GenFunction& gf);
GenFunction genfunction_from_json(const Json& j);

/// [{"nu": [...], "genus": g, "count": "a/b"}] sorted by (reverse-lex nu, genus).
Json count_table_to_json(const CountTable& t);
CountTable count_table_from_json(const Json& j);

/// One row of the residual report: the verdict and witness, without the
/// masked residual series itself.
struct KPReportRow {
    std::string form_id;
    int vanishes_through_weight = -1;
    std::optional<KPResidual::Term> first_nonzero;

    friend bool operator==(const KPReportRow& a, const KPReportRow& b) {
        if (a.form_id != b.form_id ||
            a.vanishes_through_weight != b.vanishes_through_weight ||
            a.first_nonzero.has_value() != b.first_nonzero.has_value())
            return false;
        if (!a.first_nonzero) return true;
        return a.first_nonzero->mu == b.first_nonzero->mu &&
               a.first_nonzero->hbar_exp == b.first_nonzero->hbar_exp &&
               a.first_nonzero->coeff == b.first_nonzero->coeff;
    }
};

Json kp_report_to_json(const std::vector<KPResidual>& residuals);
std::vector<KPReportRow> kp_report_from_json(const Json& j);
Json conjecture_report_to_json(const std::vector<ConjectureReport>& reports);
std::vector<ConjectureReport> conjecture_report_from_json(const Json& j);

}  // namespace covercount

#include "infranil/io.hpp"

#include <algorithm>
#include <sstream>

#include "infranil/cohomology.hpp"

namespace infranil {

using json = nlohmann::ordered_json;

namespace {

Rational rational_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError("MalformedRational", where + ": " + e.what());
        }
    }
    throw ParseError("MalformedRational", where + ": expected an integer or a \"p/q\" string");
}

RationalMatrix matrix_from_json(const json& j, int dim, const std::string& where) {
    if (!j.is_array()) throw ParseError("MalformedMatrix", where + ": expected an array");
    std::vector<Rational> entries;
    if (!j.empty() && j[0].is_array()) {
        if (static_cast<int>(j.size()) != dim)
            throw ParseError("MalformedMatrix", where + ": expected " + std::to_string(dim) +
                                                    " rows");
        for (int r = 0; r < dim; ++r) {
            if (!j[r].is_array() || static_cast<int>(j[r].size()) != dim)
                throw ParseError("MalformedMatrix",
                                 where + ": row " + std::to_string(r) + " is not square");
            for (int c = 0; c < dim; ++c)
                entries.push_back(rational_from_json(
                    j[r][c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]"));
        }
    } else {
        if (static_cast<int>(j.size()) != dim * dim)
            throw ParseError("MalformedMatrix", where + ": expected " + std::to_string(dim * dim) +
                                                    " row-major entries");
        for (std::size_t i = 0; i < j.size(); ++i)
            entries.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    }
    return RationalMatrix(dim, std::move(entries));
}

CohomologyEigenData eigen_data_from_json(const json& j, const std::string& where) {
    if (!j.is_array())
        throw ParseError("CohomologyDataShape", where + ": expected an array of degree lists");
    CohomologyEigenData out;
    for (std::size_t d = 0; d < j.size(); ++d) {
        if (!j[d].is_array())
            throw ParseError("CohomologyDataShape",
                             where + "[" + std::to_string(d) + "]: expected an array");
        std::vector<Rational> degree;
        for (std::size_t i = 0; i < j[d].size(); ++i)
            degree.push_back(rational_from_json(
                j[d][i], where + "[" + std::to_string(d) + "][" + std::to_string(i) + "]"));
        out.push_back(std::move(degree));
    }
    return out;
}

LieAlgebraData brackets_from_json(const json& j, int dim) {
    if (!j.is_array())
        throw ParseError("MalformedBrackets", "lieBrackets: expected an array of triplets");
    LieAlgebraData l(dim);
    std::vector<std::vector<std::vector<bool>>> given(
        dim, std::vector<std::vector<bool>>(dim, std::vector<bool>(dim, false)));
    for (std::size_t t = 0; t < j.size(); ++t) {
        const std::string where = "lieBrackets[" + std::to_string(t) + "]";
        const json& e = j[t];
        if (!e.is_array() || e.size() != 4)
            throw ParseError("MalformedBrackets", where + ": expected [i, j, k, value]");
        if (!e[0].is_number_integer() || !e[1].is_number_integer() || !e[2].is_number_integer())
            throw ParseError("MalformedBrackets", where + ": indices must be integers");
        const int i = e[0].get<int>(), jj = e[1].get<int>(), k = e[2].get<int>();
        if (i < 0 || jj < 0 || k < 0 || i >= dim || jj >= dim || k >= dim)
            throw ParseError("MalformedBrackets", where + ": index out of range (0-based)");
        const Rational v = rational_from_json(e[3], where + "[3]");
        if (i == jj && v != 0)
            throw ParseError("BracketAntisymmetry", where + ": [x_i, x_i] must vanish");
        if (given[i][jj][k] && l.c(i, jj, k) != v)
            throw ParseError("MalformedBrackets", where + ": conflicting duplicate entry");
        if (given[jj][i][k] && l.c(jj, i, k) != -v)
            throw ParseError("BracketAntisymmetry",
                             where + ": conflicts with the entry for [x" + std::to_string(jj) +
                                 ", x" + std::to_string(i) + "]");
        l.set_c(i, jj, k, v);
        l.set_c(jj, i, k, -v);
        given[i][jj][k] = true;
        given[jj][i][k] = true;
    }
    return l;
}

json rational_json(const Rational& q) { return json(to_string(q)); }

json interval_json(const QInterval& iv) {
    return json{{"lower", to_string(iv.lo)}, {"upper", to_string(iv.hi)}};
}

json poly_json(const Polynomial& p) {
    json arr = json::array();
    for (int k = 0; k <= p.degree(); ++k) arr.push_back(to_string(p.coeff(k)));
    if (p.is_zero()) arr.push_back("0");
    return arr;
}

json ratfunc_json(const RationalFunction& f) {
    return json{{"numerator", poly_json(f.num)},
                {"denominator", poly_json(f.den)},
                {"display", f.str()}};
}

json enclosure_json(const RootEnclosure& e) {
    return json{{"re", to_string(e.re)},
                {"im", to_string(e.im)},
                {"radius", to_string(e.radius)},
                {"multiplicity", e.multiplicity},
                {"real", e.is_real},
                {"exact", e.exact()}};
}

json spectral_json(const SpectralProfile& prof) {
    json eigs = json::array();
    for (const auto& e : prof.eigenvalues) eigs.push_back(enclosure_json(e));
    json out{{"dim", prof.dim},
             {"charPoly", poly_json(prof.charPoly)},
             {"charPolyDisplay", prof.charPoly.str()},
             {"hyperbolic", prof.isHyperbolic},
             {"nilpotent", prof.isNilpotent},
             {"eigenvalueOne", prof.hasEigenvalueOne},
             {"p", prof.p},
             {"n", prof.n},
             {"eigenvalues", eigs}};
    out["wedgeSpectralRadius"] =
        prof.wedgeSpectralRadius ? interval_json(*prof.wedgeSpectralRadius) : json(nullptr);
    out["asymptoticNielsen"] =
        prof.asymptoticNielsen ? interval_json(*prof.asymptoticNielsen) : json(nullptr);
    return out;
}

json expsum_json(const ExponentialSum& sum) {
    json terms = json::array();
    for (const auto& t : sum.terms)
        terms.push_back(json{{"coefficient", to_string(t.coeff)}, {"base", enclosure_json(t.base)}});
    return json{{"m", sum.m},
                {"terms", terms},
                {"recurrence", json{{"order", sum.fit.order},
                                    {"polynomial", poly_json(sum.fit.recurrencePolynomial)},
                                    {"trainingLength", sum.fit.trainingLength},
                                    {"validated", sum.fit.validated}}}};
}

json trace_json(const HPerBoundTrace& tr) {
    return json{{"lambda1Lower", to_string(tr.lambda1Lower)},
                {"mu", to_string(tr.mu)},
                {"epsilon", to_string(tr.epsilon)},
                {"k0", tr.k0},
                {"l0", tr.l0},
                {"tauLower", to_string(tr.tauLower)},
                {"nu", to_string(tr.nu)},
                {"k0prime", tr.k0prime},
                {"m0", to_string(tr.m0)}};
}

json hper_json(const HPerReport& rep) {
    json certified = json::array();
    for (long k : rep.certifiedPeriods) certified.push_back(k);
    json unknown = json::array();
    if (rep.cofiniteFrom) {
        for (long k = 1; k <= rep.maxK; ++k) {
            if (Int(k) < *rep.cofiniteFrom && !rep.certifiedPeriods.count(k)) unknown.push_back(k);
        }
    } else {
        for (long k = 2; k <= rep.maxK; ++k)
            if (!rep.certifiedPeriods.count(k)) unknown.push_back(k);
    }
    json out{{"mode", rep.mode == HPerMode::NilpotentHyperbolic ? "nilpotentHyperbolic"
                                                                : "nonNilpotentHyperbolic"},
             {"maxK", rep.maxK},
             {"certifiedPeriods", certified},
             {"unknownPeriods", unknown},
             {"nilpotentConclusion", rep.nilpotentConclusion},
             {"consistent", true}};
    out["cofiniteFrom"] = rep.cofiniteFrom ? json(to_string(*rep.cofiniteFrom)) : json(nullptr);
    out["trace"] = rep.trace ? trace_json(*rep.trace) : json(nullptr);
    return out;
}

const char* remediation_for(const std::string& tag) {
    if (tag == "NotHyperbolic")
        return "run classify to inspect the spectrum; the certification theorems need a "
               "hyperbolic linear part";
    if (tag == "NonIntegerAverage" || tag == "NotRealizable")
        return "check that holonomy and linear part come from a genuine affine map; see the "
               "semiconjugacy diagnostics";
    if (tag == "MissingLfPlus")
        return "supply fPlusCohomology for gammaPlusIndex = 2, or set gammaPlusIndex to 1";
    if (tag == "ValidationFailed")
        return "the Nielsen sequence did not settle into a finite exponential sum at this "
               "budget; verify the input data";
    if (tag == "NotEndomorphism")
        return "the linear part must preserve the bracket: D[x,y] = [Dx,Dy]";
    if (tag == "EigenvalueOne")
        return "the asymptotic Nielsen number needs 1 off the spectrum";
    return "";
}

std::string table_cell_name(long p, long n, int idx) {
    std::ostringstream os;
    os << "p " << (p % 2 == 0 ? "even" : "odd") << ", n " << (n % 2 == 0 ? "even" : "odd") << ", "
       << (idx == 1 ? "Gamma = Gamma+" : "[Gamma:Gamma+] = 2");
    return os.str();
}

}  // namespace

InputDocument parse_input(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("MalformedJson", e.what());
    }
    if (!j.is_object()) throw ParseError("MalformedDocument", "top level must be an object");

    static const std::vector<std::string> known{
        "name",    "dim",         "linearPart",      "holonomy", "gammaPlusIndex",
        "lieBrackets", "fCohomology", "fPlusCohomology", "options"};
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw ParseError("UnknownField", "unknown field \"" + key + "\"");
    }

    InputDocument doc;
    doc.name = j.value("name", std::string("unnamed"));
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw ParseError("BadDimension", "dim: required positive integer");
    const int dim = j["dim"].get<int>();
    if (dim < 1 || dim > 10)
        throw ParseError("BadDimension", "dim must be between 1 and 10");
    doc.map.dim = dim;

    if (!j.contains("linearPart"))
        throw ParseError("MalformedMatrix", "linearPart: required");
    doc.map.linearPart = matrix_from_json(j["linearPart"], dim, "linearPart");

    std::vector<RationalMatrix> hol;
    if (j.contains("holonomy")) {
        if (!j["holonomy"].is_array())
            throw ParseError("MalformedMatrix", "holonomy: expected an array of matrices");
        for (std::size_t i = 0; i < j["holonomy"].size(); ++i)
            hol.push_back(
                matrix_from_json(j["holonomy"][i], dim, "holonomy[" + std::to_string(i) + "]"));
    }
    doc.map.holonomy = make_holonomy(std::move(hol), dim);

    doc.map.gammaPlusIndex = j.value("gammaPlusIndex", 1);
    if (j.contains("lieBrackets")) doc.map.brackets = brackets_from_json(j["lieBrackets"], dim);
    if (j.contains("fCohomology"))
        doc.map.fCohomology = eigen_data_from_json(j["fCohomology"], "fCohomology");
    if (j.contains("fPlusCohomology"))
        doc.map.fPlusCohomology = eigen_data_from_json(j["fPlusCohomology"], "fPlusCohomology");

    if (j.contains("options")) {
        const json& o = j["options"];
        if (!o.is_object()) throw ParseError("BadOptions", "options: expected an object");
        for (const auto& [key, value] : o.items()) {
            (void)value;
            if (key != "maxK" && key != "precision")
                throw ParseError("BadOptions", "unknown option \"" + key + "\"");
        }
        doc.options.maxK = o.value("maxK", 40);
        doc.options.precision = o.value("precision", 32u);
    }
    if (doc.options.maxK < 1 || doc.options.maxK > 10000)
        throw ParseError("BadOptions", "maxK must be between 1 and 10000");
    if (doc.options.precision < 4 || doc.options.precision > 4096)
        throw ParseError("BadOptions", "precision exponent must be between 4 and 4096");

    validate_map_data(doc.map);
    return doc;
}

nlohmann::ordered_json render_input(const InputDocument& doc) {
    json j;
    j["name"] = doc.name;
    j["dim"] = doc.map.dim;
    auto matrix_json = [&](const RationalMatrix& m) {
        json rows = json::array();
        for (int r = 0; r < m.dim(); ++r) {
            json row = json::array();
            for (int c = 0; c < m.dim(); ++c) row.push_back(to_string(m.at(r, c)));
            rows.push_back(std::move(row));
        }
        return rows;
    };
    j["linearPart"] = matrix_json(doc.map.linearPart);
    json hol = json::array();
    for (const auto& m : doc.map.holonomy.matrices) hol.push_back(matrix_json(m));
    j["holonomy"] = hol;
    j["gammaPlusIndex"] = doc.map.gammaPlusIndex;
    if (doc.map.brackets) {
        json br = json::array();
        const auto& l = *doc.map.brackets;
        for (int a = 0; a < l.dim(); ++a)
            for (int b = a + 1; b < l.dim(); ++b)
                for (int k = 0; k < l.dim(); ++k)
                    if (l.c(a, b, k) != 0)
                        br.push_back(json::array({a, b, k, to_string(l.c(a, b, k))}));
        j["lieBrackets"] = br;
    }
    auto eigen_json = [&](const CohomologyEigenData& data) {
        json arr = json::array();
        for (const auto& degree : data) {
            json d = json::array();
            for (const auto& v : degree) d.push_back(to_string(v));
            arr.push_back(std::move(d));
        }
        return arr;
    };
    if (doc.map.fCohomology) j["fCohomology"] = eigen_json(*doc.map.fCohomology);
    if (doc.map.fPlusCohomology) j["fPlusCohomology"] = eigen_json(*doc.map.fPlusCohomology);
    j["options"] = json{{"maxK", doc.options.maxK}, {"precision", doc.options.precision}};
    return j;
}

Command parse_command(const std::string& name) {
    if (name == "classify") return Command::Classify;
    if (name == "nielsen") return Command::Nielsen;
    if (name == "zeta") return Command::Zeta;
    if (name == "hper") return Command::Hper;
    if (name == "report") return Command::Report;
    throw ParseError("UnknownCommand",
                     "unknown command \"" + name +
                         "\" (expected classify | nielsen | zeta | hper | report)");
}

int ReportDocument::exit_code() const {
    if (!has_error()) return 0;
    return machine["error"]["exitCode"].get<int>();
}

ReportDocument run(const InputDocument& doc, Command command) {
    ReportDocument rep;
    json& m = rep.machine;
    m["name"] = doc.name;
    switch (command) {
        case Command::Classify: m["command"] = "classify"; break;
        case Command::Nielsen: m["command"] = "nielsen"; break;
        case Command::Zeta: m["command"] = "zeta"; break;
        case Command::Hper: m["command"] = "hper"; break;
        case Command::Report: m["command"] = "report"; break;
    }
    m["options"] = json{{"maxK", doc.options.maxK}, {"precision", doc.options.precision}};

    const MapData& map = doc.map;
    try {
        const SpectralProfile profile = classify(map.linearPart, doc.options.precision);
        m["spectral"] = spectral_json(profile);
        if (command == Command::Classify) return rep;

        // Nielsen sequence and Reidemeister finiteness.
        const auto seq = nielsen_sequence(map, doc.options.maxK);
        {
            json s = json::array();
            for (std::size_t i = 0; i < seq.size(); ++i)
                s.push_back(json{{"k", static_cast<long>(i + 1)}, {"value", to_string(seq[i])}});
            m["nielsen"] = json{{"sequence", s}};
        }
        {
            const ReidemeisterStatus st = reidemeister_status(map);
            json r{{"finite", st.finite}, {"valueEqualsNielsen", st.valueEqualsNielsen}};
            r["value"] = st.value ? json(to_string(*st.value)) : json(nullptr);
            m["reidemeister"] = r;
        }
        {
            json diag;
            diag["integrality"] = "ok";
            json warn = json::array();
            for (const auto& w : semiconjugacy_warnings(map)) warn.push_back(w);
            diag["semiconjugacy"] = warn;
            m["diagnostics"] = diag;
        }
        if (command == Command::Nielsen) return rep;

        if (command == Command::Zeta || command == Command::Report) {
            json z;
            std::optional<RationalFunction> from_sum;
            if (profile.isNilpotent) {
                // N(f^k) = 1 for all k, so the zeta function is 1/(1-z).
                ExponentialSum unit;
                RootEnclosure one;
                one.re = 1;
                one.im = 0;
                one.radius = 0;
                one.is_real = true;
                one.factor = Polynomial({Rational(-1), Rational(1)});
                unit.terms.push_back(ExpTerm{Int(1), one});
                unit.m = 1;
                m["exponentialSum"] = expsum_json(unit);
                m["exponentialSum"]["note"] = "nilpotent linear part: N(f^k) = 1 for all k";
                from_sum = RationalFunction::make(Polynomial::constant(Rational(1)),
                                                 Polynomial({Rational(1), Rational(-1)}));
            } else if (profile.isHyperbolic) {
                const ExponentialSum sum = exponential_sum_form(map, profile);
                m["exponentialSum"] = expsum_json(sum);
                from_sum = nielsen_zeta_from_sum(sum);
            } else {
                throw DomainError("NotHyperbolic",
                                  "zeta assembly needs a hyperbolic linear part");
            }
            z["nielsenFromSum"] = ratfunc_json(*from_sum);

            // Lefschetz route: computed from the Chevalley-Eilenberg
            // complex for nilmanifolds, or from user-supplied eigenvalue
            // data on genuine infra-nilmanifolds.
            std::optional<RationalFunction> lf;
            if (map.fCohomology) {
                lf = zeta_from_eigenvalue_lists(*map.fCohomology);
                z["lefschetzRoute"] = "fCohomology input";
            } else if (map.trivial_holonomy()) {
                const LieAlgebraData l =
                    map.brackets ? *map.brackets : LieAlgebraData::abelian(map.dim);
                const CohomologySpectrum spec =
                    cohomology_action(l, map.linearPart, doc.options.precision);
                lf = lefschetz_zeta(spec);
                z["lefschetzRoute"] = "Chevalley-Eilenberg complex";
                json betti = json::array();
                for (long b : spec.bettiNumbers) betti.push_back(b);
                z["bettiNumbers"] = betti;
            } else {
                z["lefschetzRoute"] = nullptr;
                z["note"] =
                    "the cohomology route on a nontrivial holonomy needs fCohomology input";
            }
            z["lefschetz"] = lf ? ratfunc_json(*lf) : json(nullptr);

            std::optional<RationalFunction> lf_plus;
            if (map.fPlusCohomology) lf_plus = zeta_from_eigenvalue_lists(*map.fPlusCohomology);
            z["lefschetzPlus"] = lf_plus ? ratfunc_json(*lf_plus) : json(nullptr);

            if (lf) {
                const RationalFunction table = nielsen_zeta_from_table(
                    *lf, lf_plus, profile.p, profile.n, map.gammaPlusIndex);
                z["nielsenFromTable"] = ratfunc_json(table);
                z["tableCell"] = table_cell_name(profile.p, profile.n, map.gammaPlusIndex);
                z["routesAgree"] = (table == *from_sum);
            } else {
                z["nielsenFromTable"] = nullptr;
                z["tableCell"] = nullptr;
                z["routesAgree"] = nullptr;
            }
            m["zeta"] = z;
            if (command == Command::Zeta) return rep;
        }

        const HPerReport hrep = hper_report(map, doc.options.maxK);
        m["hper"] = hper_json(hrep);
        return rep;
    } catch (const Error& e) {
        json err{{"exitCode", static_cast<int>(e.error_class())},
                 {"tag", e.tag()},
                 {"message", e.what()}};
        const std::string hint = remediation_for(e.tag());
        err["remediation"] = hint.empty() ? json(nullptr) : json(hint);
        m["error"] = err;
        return rep;
    }
}

namespace {

void render_ratfunc_line(std::ostringstream& os, const char* label, const json& rf) {
    if (rf.is_null()) {
        os << label << ": (not available)\n";
        return;
    }
    os << label << ": " << rf["display"].get<std::string>() << "\n";
}

}  // namespace

std::string ReportDocument::human() const {
    const json& m = machine;
    std::ostringstream os;
    os << "== " << m.value("name", std::string("?")) << " ("
       << m.value("command", std::string("?")) << ") ==\n";
    if (m.contains("error")) {
        const json& e = m["error"];
        os << "ERROR [" << e["tag"].get<std::string>() << "] " << e["message"].get<std::string>()
           << "\n";
        if (!e["remediation"].is_null())
            os << "hint: " << e["remediation"].get<std::string>() << "\n";
    }
    if (m.contains("spectral")) {
        const json& s = m["spectral"];
        os << "spectral: dim " << s["dim"].get<int>() << ", char poly "
           << s["charPolyDisplay"].get<std::string>() << "\n";
        os << "  hyperbolic " << (s["hyperbolic"].get<bool>() ? "yes" : "no") << ", nilpotent "
           << (s["nilpotent"].get<bool>() ? "yes" : "no") << ", eigenvalue one "
           << (s["eigenvalueOne"].get<bool>() ? "yes" : "no") << ", p " << s["p"].get<long>()
           << ", n " << s["n"].get<long>() << "\n";
        for (const auto& e : s["eigenvalues"]) {
            os << "  eigenvalue " << e["re"].get<std::string>();
            if (e["im"].get<std::string>() != "0") os << " + " << e["im"].get<std::string>() << "i";
            os << " (radius " << e["radius"].get<std::string>() << ", multiplicity "
               << e["multiplicity"].get<int>() << (e["exact"].get<bool>() ? ", exact" : "")
               << ")\n";
        }
        if (!s["wedgeSpectralRadius"].is_null())
            os << "  Sp(wedge D*) in [" << s["wedgeSpectralRadius"]["lower"].get<std::string>()
               << ", " << s["wedgeSpectralRadius"]["upper"].get<std::string>() << "]\n";
        if (!s["asymptoticNielsen"].is_null())
            os << "  asymptotic Nielsen number in ["
               << s["asymptoticNielsen"]["lower"].get<std::string>() << ", "
               << s["asymptoticNielsen"]["upper"].get<std::string>() << "]\n";
    }
    if (m.contains("nielsen")) {
        os << "Nielsen numbers:\n";
        for (const auto& row : m["nielsen"]["sequence"])
            os << "  N(f^" << row["k"].get<long>() << ") = " << row["value"].get<std::string>()
               << "\n";
    }
    if (m.contains("reidemeister")) {
        const json& r = m["reidemeister"];
        if (r["finite"].get<bool>()) {
            os << "Reidemeister number: finite, R(f) = N(f) = " << r["value"].get<std::string>()
               << "\n";
        } else {
            os << "Reidemeister number: infinite (some det(I - A D) = 0)\n";
        }
    }
    if (m.contains("exponentialSum")) {
        const json& e = m["exponentialSum"];
        os << "exponential sum, m = " << e["m"].get<int>() << ":\n";
        for (const auto& t : e["terms"]) {
            os << "  coefficient " << t["coefficient"].get<std::string>() << " on base "
               << t["base"]["re"].get<std::string>();
            if (t["base"]["im"].get<std::string>() != "0")
                os << " + " << t["base"]["im"].get<std::string>() << "i";
            os << " (radius " << t["base"]["radius"].get<std::string>() << ")\n";
        }
        if (e.contains("note")) os << "  note: " << e["note"].get<std::string>() << "\n";
    }
    if (m.contains("zeta")) {
        const json& z = m["zeta"];
        render_ratfunc_line(os, "Nielsen zeta (sum route)", z["nielsenFromSum"]);
        render_ratfunc_line(os, "Lefschetz zeta", z["lefschetz"]);
        render_ratfunc_line(os, "Lefschetz zeta of f+", z["lefschetzPlus"]);
        render_ratfunc_line(os, "Nielsen zeta (table route)", z["nielsenFromTable"]);
        if (!z["tableCell"].is_null())
            os << "table cell: " << z["tableCell"].get<std::string>() << "\n";
        if (!z["routesAgree"].is_null())
            os << "routes agree: " << (z["routesAgree"].get<bool>() ? "yes" : "NO") << "\n";
    }
    if (m.contains("hper")) {
        const json& h = m["hper"];
        os << "homotopy minimal periods (mode " << h["mode"].get<std::string>() << ", maxK "
           << h["maxK"].get<long>() << "):\n";
        os << "  certified:";
        for (const auto& k : h["certifiedPeriods"]) os << " " << k.get<long>();
        os << "\n";
        if (!h["cofiniteFrom"].is_null())
            os << "  every k >= " << h["cofiniteFrom"].get<std::string>()
               << " is a homotopy minimal period\n";
        if (!h["unknownPeriods"].empty()) {
            os << "  unknown (not certified, not excluded):";
            for (const auto& k : h["unknownPeriods"]) os << " " << k.get<long>();
            os << "\n";
        }
        if (h["nilpotentConclusion"].get<bool>()) os << "  HPer(f) = {1}\n";
        if (!h["trace"].is_null()) {
            const json& t = h["trace"];
            os << "  bound trace: lambda1 >= " << t["lambda1Lower"].get<std::string>() << ", mu = "
               << t["mu"].get<std::string>() << ", epsilon = " << t["epsilon"].get<std::string>()
               << ", k0 = " << t["k0"].get<long>() << ", l0 = " << t["l0"].get<long>()
               << ", tau >= " << t["tauLower"].get<std::string>() << ", nu = "
               << t["nu"].get<std::string>() << ", k0' = " << t["k0prime"].get<long>()
               << ", m0 = " << t["m0"].get<std::string>() << "\n";
        }
    }
    if (m.contains("diagnostics")) {
        const json& d = m["diagnostics"];
        if (!d["semiconjugacy"].empty()) {
            os << "warnings:\n";
            for (const auto& w : d["semiconjugacy"]) os << "  " << w.get<std::string>() << "\n";
        }
    }
    return os.str();
}

std::string csv_header() { return "name,dim,hyperbolic,nilpotent,m0,maxCertifiedK"; }

std::string csv_row(const ReportDocument& report) {
    const json& m = report.machine;
    std::ostringstream os;
    os << m.value("name", std::string("?")) << ",";
    if (m.contains("spectral")) {
        os << m["spectral"]["dim"].get<int>() << ","
           << (m["spectral"]["hyperbolic"].get<bool>() ? "true" : "false") << ","
           << (m["spectral"]["nilpotent"].get<bool>() ? "true" : "false") << ",";
    } else {
        os << ",,,";
    }
    if (m.contains("hper") && !m["hper"]["cofiniteFrom"].is_null()) {
        os << m["hper"]["cofiniteFrom"].get<std::string>();
    }
    os << ",";
    if (m.contains("hper") && !m["hper"]["certifiedPeriods"].empty()) {
        long best = 0;
        for (const auto& k : m["hper"]["certifiedPeriods"])
            best = std::max(best, k.get<long>());
        os << best;
    }
    return os.str();
}

}  // namespace infranil

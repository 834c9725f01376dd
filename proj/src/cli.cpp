#include "tempered/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "tempered/classgroup.hpp"
#include "tempered/csv.hpp"
#include "tempered/eisenstein.hpp"
#include "tempered/figure.hpp"
#include "tempered/two_two.hpp"
#include "tempered/verifier.hpp"

namespace tempered {

namespace {

using json = nlohmann::ordered_json;

std::int64_t j(Int v) { return to_i64(v); }
json j(const Form& f) { return json::array({j(f.a), j(f.b), j(f.c)}); }
json j(const Vec2& v) { return json::array({j(v.x), j(v.y)}); }
json j(const Rational& r) { return r.str(); }
json j(const Mat2& m) { return json::array({json::array({j(m.a), j(m.b)}), json::array({j(m.c), j(m.d)})}); }

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

// Left-aligned columns separated by two spaces.
class Table {
  public:
    explicit Table(std::vector<std::string> header) : rows_{std::move(header)} {}
    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
    void print(std::ostream& out) const {
        std::vector<std::size_t> width;
        for (const auto& row : rows_)
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (width.size() <= i) width.push_back(0);
                width[i] = std::max(width[i], row[i].size());
            }
        for (const auto& row : rows_) {
            std::string line;
            for (std::size_t i = 0; i < row.size(); ++i) {
                line += row[i];
                if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
            }
            out << line << '\n';
        }
    }

  private:
    std::vector<std::vector<std::string>> rows_;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

std::string vec_list(const std::vector<Vec2>& vs) {
    std::vector<std::string> parts;
    for (const Vec2& v : vs) parts.push_back(to_string(v));
    return join(parts, " ");
}

Int checked_prime(std::int64_t ell) {
    if (!is_prime(ell)) throw std::domain_error("--ell " + std::to_string(ell) + " is not prime");
    return ell;
}

Int checked_disc(std::int64_t d) {
    if (!is_negative_discriminant(d)) throw std::domain_error("--disc " + std::to_string(d) + " is not a negative discriminant (0 or 1 mod 4)");
    return d;
}

std::vector<Rational> parse_rationals(const std::string& text, std::size_t count, const std::string& what) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string field;
    while (std::getline(ss, field, ',')) out.push_back(Rational::parse(field));
    if (out.size() != count) throw std::domain_error(what + " expects " + std::to_string(count) + " comma-separated values");
    return out;
}

PairLattice parse_pair(const std::string& gram, const std::string& sub, std::int64_t ell) {
    const auto g = parse_rationals(gram, 3, "--gram");
    const auto h = parse_rationals(sub, 4, "--sub");
    for (const auto& x : h)
        if (!x.is_integer()) throw std::domain_error("--sub entries must be integers");
    PairLattice p{Gram{g[0], g[1] / 2, g[2]}, Mat2{h[0].num(), h[1].num(), h[2].num(), h[3].num()}, checked_prime(ell)};
    p.validate();
    return p;
}

enum class Format { table, csv, json };

struct Common {
    bool as_json = false;
    bool as_csv = false;
    std::string out_path;

    Format format() const { return as_json ? Format::json : as_csv ? Format::csv : Format::table; }
};

void add_common(CLI::App* cmd, Common& c, bool csv_flag = true) {
    auto* js = cmd->add_flag("--json", c.as_json, "JSON output");
    if (csv_flag) cmd->add_flag("--csv", c.as_csv, "CSV output")->excludes(js);
    cmd->add_option("--out", c.out_path, "Write output to PATH instead of stdout");
}

json classification_json(const Classification& c) {
    json out;
    out["tempered"] = c.tempered;
    out["s"] = c.s;
    out["s_prime"] = c.s_prime;
    out["min_outside"] = j(c.min_outside);
    out["min_inside"] = j(c.min_inside);
    out["tau2"] = j(c.tau2);
    out["S"] = json::array();
    for (const Vec2& v : c.S) out["S"].push_back(j(v));
    out["S_prime"] = json::array();
    for (const Vec2& v : c.S_prime) out["S_prime"].push_back(j(v));
    return out;
}

// --- subcommands ----------------------------------------------------------

void cmd_classgroup(std::ostream& out, Format fmt, std::int64_t disc, const std::vector<std::string>& compose, bool table) {
    const ClassGroup g(checked_disc(disc));
    const GenusPartition gp = genus_partition(g);
    const auto amb = ambiguous_classes(g);
    const auto wr = well_rounded_classes(g);
    auto has = [](const std::vector<std::size_t>& v, std::size_t i) { return std::find(v.begin(), v.end(), i) != v.end(); };
    const Int limit = std::max<Int>(1000, 10 * -g.discriminant());

    std::optional<std::array<std::size_t, 3>> product;
    if (!compose.empty()) {
        const std::size_t i = g.class_of(parse_form(compose[0])), k = g.class_of(parse_form(compose[1]));
        product = std::array{i, k, g.compose(i, k)};
    }

    if (fmt == Format::json) {
        json doc;
        doc["discriminant"] = j(g.discriminant());
        doc["class_number"] = g.size();
        doc["classes"] = json::array();
        for (std::size_t i = 0; i < g.size(); ++i) {
            json c;
            c["form"] = j(g.form(i));
            c["order"] = g.order(i);
            c["ambiguous"] = has(amb, i);
            c["well_rounded"] = has(wr, i);
            c["genus"] = gp.genus_of[i];
            auto p = smallest_represented_prime(g, i, limit);
            c["smallest_prime"] = p ? json(j(*p)) : json(nullptr);
            doc["classes"].push_back(c);
        }
        if (product) doc["product"] = {j(g.form((*product)[0])), j(g.form((*product)[1])), j(g.form((*product)[2]))};
        if (table) doc["composition_table"] = g.composition_table();
        out << doc.dump(2) << '\n';
        return;
    }
    if (fmt == Format::csv) {
        out << csv_version_line << "\na,b,c,order,ambiguous,well_rounded,genus,smallest_prime\n";
        for (std::size_t i = 0; i < g.size(); ++i) {
            auto p = smallest_represented_prime(g, i, limit);
            out << to_csv(g.form(i)) << ',' << g.order(i) << ',' << has(amb, i) << ',' << has(wr, i) << ',' << gp.genus_of[i] << ','
                << (p ? to_string(*p) : "") << '\n';
        }
        return;
    }
    out << "D = " << to_string(g.discriminant()) << ", class number " << g.size() << '\n';
    Table t({"form", "order", "ambiguous", "well-rounded", "genus", "p"});
    for (std::size_t i = 0; i < g.size(); ++i) {
        auto p = smallest_represented_prime(g, i, limit);
        t.add({to_string(g.form(i)), std::to_string(g.order(i)), has(amb, i) ? "yes" : "no", has(wr, i) ? "yes" : "no",
               std::to_string(gp.genus_of[i]), p ? to_string(*p) : "-"});
    }
    t.print(out);
    if (product)
        out << to_string(g.form((*product)[0])) << " * " << to_string(g.form((*product)[1])) << " = " << to_string(g.form((*product)[2]))
            << '\n';
    if (table) {
        out << "composition table (class indices in the order above)\n";
        for (const auto& row : g.composition_table()) {
            std::vector<std::string> cells;
            for (std::size_t k : row) cells.push_back(std::to_string(k));
            out << join(cells, " ") << '\n';
        }
    }
}

std::vector<TemperedRecord> eisenstein_records(Int ell, const std::string& kind) {
    if (kind == "3and3") {
        auto r = three_three(ell);
        return r ? std::vector{*r} : std::vector<TemperedRecord>{};
    }
    if (kind == "3and1") return three_one_records(ell);
    return one_three_records(ell);
}

void cmd_temperaments(std::ostream& out, bool as_json, std::int64_t ell_in, const std::string& kind) {
    const Int ell = checked_prime(ell_in);
    if (kind == "2and2") {
        const auto recs = enumerate_two_two(ell);
        if (!as_json) return write_two_two_csv(out, recs);
        json doc = json::array();
        for (const auto& r : recs)
            doc.push_back({{"ell", j(r.ell)}, {"D", j(r.D)}, {"classL", j(r.classL)}, {"classM", j(r.classM)}, {"tau2", j(r.tau2)}});
        out << doc.dump(2) << '\n';
        return;
    }
    const auto recs = eisenstein_records(ell, kind);
    if (!as_json) return write_temperament_csv(out, recs);
    json doc = json::array();
    for (const auto& r : recs)
        doc.push_back({{"kind", to_string(r.kind)},
                       {"ell", j(r.ell)},
                       {"tau2", j(r.tau2)},
                       {"witness", j(r.witness.coords())},
                       {"sublattice", j(r.sublattice.basis)}});
    out << doc.dump(2) << '\n';
}

void cmd_verify(std::ostream& out, bool as_json, const PairLattice& p) {
    const Classification c = classify(p);
    const auto rat = solve_rationality(c.S, c.S_prime);
    if (as_json) {
        json doc = classification_json(c);
        if (rat) doc["rationality"] = {{"a", j(rat->a)}, {"b", j(rat->b)}, {"c", j(rat->c)}, {"u", j(rat->u)}, {"unique", rat->unique}};
        out << doc.dump(2) << '\n';
        return;
    }
    out << "tempered: " << (c.tempered ? "yes" : "no") << '\n'
        << "type: " << c.s << "-and-" << c.s_prime << '\n'
        << "min outside M: " << c.min_outside.str() << '\n'
        << "min inside M: " << c.min_inside.str() << '\n'
        << "tau^2: " << c.tau2.str() << '\n'
        << "S: " << vec_list(c.S) << '\n'
        << "S': " << vec_list(c.S_prime) << '\n';
    if (rat && rat->unique)
        out << "rationality: a=" << rat->a.str() << " b=" << rat->b.str() << " c=" << rat->c.str() << " u=" << rat->u.str() << '\n';
    else
        out << "rationality: " << (rat ? "not unique" : "inconsistent") << '\n';
}

void cmd_oracle(std::ostream& out, Format fmt, std::int64_t ell) {
    const auto entries = oracle_eisenstein(checked_prime(ell));
    if (fmt == Format::json) {
        json doc = json::array();
        for (const auto& e : entries) {
            json row = classification_json(e.classification);
            row["sublattice"] = j(e.sublattice.basis);
            doc.push_back(row);
        }
        out << doc.dump(2) << '\n';
        return;
    }
    if (fmt == Format::csv) {
        out << csv_version_line << "\nh11,h12,h21,h22,tempered,s,s_prime,tau2_num,tau2_den\n";
        for (const auto& e : entries) {
            const Mat2& m = e.sublattice.basis;
            const Classification& c = e.classification;
            out << to_string(m.a) << ',' << to_string(m.b) << ',' << to_string(m.c) << ',' << to_string(m.d) << ',' << c.tempered << ','
                << c.s << ',' << c.s_prime << ',' << to_string(c.tau2.num()) << ',' << to_string(c.tau2.den()) << '\n';
        }
        return;
    }
    Table t({"sublattice", "tempered", "type", "tau^2"});
    for (const auto& e : entries) {
        const Classification& c = e.classification;
        t.add({to_string(e.sublattice.basis), c.tempered ? "yes" : "no", std::to_string(c.s) + "-and-" + std::to_string(c.s_prime), c.tau2.str()});
    }
    t.print(out);
}

void cmd_genus(std::ostream& out, bool as_json, std::int64_t disc) {
    const ClassGroup g(checked_disc(disc));
    const GenusPartition gp = genus_partition(g);
    json doc = json::array();
    for (std::size_t k = 0; k < gp.genera.size(); ++k) {
        const auto values = genus_values(g, gp.genera[k]);
        std::vector<std::string> forms, vals;
        for (std::size_t c : gp.genera[k]) forms.push_back(to_string(g.form(c)));
        for (Int v : values) vals.push_back(to_string(v));
        if (as_json) {
            json row{{"genus", k}, {"classes", json::array()}, {"values", json::array()}};
            for (std::size_t c : gp.genera[k]) row["classes"].push_back(j(g.form(c)));
            for (Int v : values) row["values"].push_back(j(v));
            doc.push_back(row);
            continue;
        }
        out << "genus " << k << ": " << join(forms, " ") << '\n' << "  " << values.size() << " values mod " << to_string(-g.discriminant())
            << ": " << join(vals, ",") << '\n';
    }
    if (as_json) out << doc.dump(2) << '\n';
}

void cmd_wellrounded(std::ostream& out, bool as_json, std::int64_t disc) {
    const auto ws = has_wr_discriminant(checked_disc(disc));
    if (as_json) {
        json doc = json::array();
        for (const auto& w : ws) doc.push_back({{"F", j(w.F)}, {"G", j(w.G)}, {"ratio", j(w.ratio())}, {"form", j(w.form())}});
        out << doc.dump(2) << '\n';
        return;
    }
    out << "D = " << disc << ": " << ws.size() << " well-rounded witness" << (ws.size() == 1 ? "" : "es") << '\n';
    Table t({"F", "G", "F/G", "form"});
    for (const auto& w : ws) t.add({to_string(w.F), to_string(w.G), w.ratio().str(), to_string(w.form())});
    if (!ws.empty()) t.print(out);
}

void cmd_ells_for_disc(std::ostream& out, std::ostream& err, bool as_json, std::int64_t disc, std::int64_t max) {
    const auto res = ells_for_disc(checked_disc(disc), max);
    if (!res.diagnostic.empty()) err << res.diagnostic << '\n';
    if (as_json) {
        json doc = json::array();
        for (const auto& h : res.hits) doc.push_back({{"ell", j(h.ell)}, {"classL", j(h.classL)}, {"classM", j(h.classM)}});
        out << doc.dump(2) << '\n';
        return;
    }
    Table t({"ell", "classL", "classM"});
    for (const auto& h : res.hits) t.add({to_string(h.ell), to_string(h.classL), to_string(h.classM)});
    t.print(out);
}

void cmd_congruences(std::ostream& out, bool as_json, std::int64_t disc) {
    const auto cc = congruence_classes(checked_disc(disc));
    if (as_json) {
        json doc{{"modulus", j(cc.modulus)}, {"sufficient", cc.sufficient}, {"genera", cc.genera}, {"residues", json::array()}};
        for (const auto& r : cc.residues) {
            json row = json::array();
            for (Int v : r) row.push_back(j(v));
            doc["residues"].push_back(row);
        }
        out << doc.dump(2) << '\n';
        return;
    }
    if (!cc.sufficient) {
        out << "insufficient: some genus of D = " << disc << " contains more than one class; congruences mod " << to_string(cc.modulus)
            << " do not decide ell\n";
        return;
    }
    for (std::size_t k = 0; k < cc.genera.size(); ++k) {
        std::vector<std::string> vals;
        for (Int v : cc.residues[k]) vals.push_back(to_string(v));
        out << "genus " << cc.genera[k] << " mod " << to_string(cc.modulus) << " (" << vals.size() << "): " << join(vals, ",") << '\n';
    }
}

void cmd_scan(std::ostream& out, bool as_json, std::int64_t max_ell, const std::string& csv_path) {
    const RatioScan s = max_ratio_scan(max_ell);
    if (!csv_path.empty()) {
        std::ofstream f(csv_path);
        if (!f) throw std::runtime_error("cannot write " + csv_path);
        f << csv_version_line << "\nell,D_max,ratio_num,ratio_den\n";
        for (const auto& r : s.rows)
            f << to_string(r.ell) << ',' << (r.D_max ? to_string(*r.D_max) : "") << ',' << to_string(r.ratio.num()) << ','
              << to_string(r.ratio.den()) << '\n';
    }
    if (as_json) {
        json doc{{"rows", json::array()}, {"within_four", s.all_within_four}, {"within_three", s.all_within_three}};
        for (const auto& r : s.rows)
            doc["rows"].push_back({{"ell", j(r.ell)}, {"D_max", r.D_max ? json(j(*r.D_max)) : json(nullptr)}, {"ratio", j(r.ratio)}});
        if (s.global_max) doc["max"] = {{"ell", j(s.global_max->ell)}, {"D", j(*s.global_max->D_max)}, {"ratio", j(s.global_max->ratio)}};
        out << doc.dump(2) << '\n';
        return;
    }
    Table t({"ell", "D_max", "|D|/ell^2"});
    for (const auto& r : s.rows) t.add({to_string(r.ell), r.D_max ? to_string(*r.D_max) : "-", r.D_max ? fixed(r.ratio.to_double(), 6) : "-"});
    t.print(out);
    if (s.global_max)
        out << "max |D|/ell^2 = " << s.global_max->ratio.str() << " (" << fixed(s.global_max->ratio.to_double(), 6) << ") at ell=" << to_string(s.global_max->ell)
            << ", D=" << to_string(*s.global_max->D_max) << '\n';
    out << "|D| <= 4 ell^2: " << (s.all_within_four ? "holds" : "VIOLATED") << '\n'
        << "|D| <= 3 ell^2 (conjectured): " << (s.all_within_three ? "holds" : "fails") << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Tempered perfect forms of prime index: class groups, Eisenstein temperaments, 2-and-2 forms.", "tempered-forms"};
    app.require_subcommand(1, 1);
    app.set_help_all_flag("--help-all", "Help for every subcommand");

    Common common;
    std::int64_t disc = 0, ell = 0, max = 0, max_ell = 0;
    std::string kind, gram, sub, scan_csv;
    std::vector<std::string> compose;
    bool table = false, no_circles = false;
    double window = 3.0;

    auto* classgroup = app.add_subcommand("classgroup", "Reduced forms of discriminant D with order, ambiguity, well-roundedness, genus");
    classgroup->add_option("--disc", disc, "Negative discriminant")->required();
    classgroup->add_option("--compose", compose, "Print the product of two forms 'a,b,c'")->expected(2);
    classgroup->add_flag("--table", table, "Print the full composition table");
    add_common(classgroup, common);

    auto* temperaments = app.add_subcommand("temperaments", "Tempered perfect forms of index ell (CSV by default)");
    temperaments->add_option("--ell", ell, "Prime index")->required();
    temperaments->add_option("--kind", kind, "3and3, 3and1, 1and3 or 2and2")->required()->check(CLI::IsMember({"3and3", "3and1", "1and3", "2and2"}));
    temperaments->add_flag("--json", common.as_json, "JSON output");
    temperaments->add_option("--out", common.out_path, "Write output to PATH instead of stdout");

    auto* verify = app.add_subcommand("verify", "Classify a lattice pair by short-vector enumeration");
    verify->add_option("--gram", gram, "Form coefficients a,b,c (Gram [[a,b/2],[b/2,c]]); rationals allowed")->required();
    verify->add_option("--sub", sub, "Sublattice rows h11,h12,h21,h22")->required();
    verify->add_option("--ell", ell, "Prime index |det H|")->required();
    verify->add_flag("--json", common.as_json, "JSON output");
    verify->add_option("--out", common.out_path, "Write output to PATH instead of stdout");

    auto* oracle = app.add_subcommand("oracle", "Classify every index-ell sublattice of the hexagonal lattice");
    oracle->add_option("--ell", ell, "Prime index")->required();
    add_common(oracle, common);

    auto* genus = app.add_subcommand("genus", "Genera of discriminant D and the residues mod |D| each attains");
    genus->add_option("--disc", disc, "Negative discriminant")->required();
    genus->add_flag("--json", common.as_json, "JSON output");
    genus->add_option("--out", common.out_path, "Write output to PATH instead of stdout");

    auto* wellrounded = app.add_subcommand("wellrounded", "Factorizations of |D| certifying a well-rounded reduced form");
    wellrounded->add_option("--disc", disc, "Negative discriminant")->required();
    wellrounded->add_flag("--json", common.as_json, "JSON output");
    wellrounded->add_option("--out", common.out_path, "Write output to PATH instead of stdout");

    auto* ells = app.add_subcommand("ells-for-disc", "Primes ell <= max with a 2-and-2 form of discriminant D");
    ells->add_option("--disc", disc, "Negative discriminant")->required();
    ells->add_option("--max", max, "Largest prime to test")->required()->check(CLI::PositiveNumber);
    ells->add_flag("--json", common.as_json, "JSON output");
    ells->add_option("--out", common.out_path, "Write output to PATH instead of stdout");

    auto* congruences = app.add_subcommand("congruences", "Residue classes mod |D| selecting ell, when one class per genus");
    congruences->add_option("--disc", disc, "Negative discriminant")->required();
    congruences->add_flag("--json", common.as_json, "JSON output");
    congruences->add_option("--out", common.out_path, "Write output to PATH instead of stdout");

    auto* scan = app.add_subcommand("scan", "Largest |D|/ell^2 among 2-and-2 forms, per prime ell <= max-ell");
    scan->add_option("--max-ell", max_ell, "Largest prime index")->required()->check(CLI::PositiveNumber);
    scan->add_option("--csv", scan_csv, "Also write the table as CSV to FILE");
    scan->add_flag("--json", common.as_json, "JSON output");
    scan->add_option("--out", common.out_path, "Write output to PATH instead of stdout");

    auto* figure = app.add_subcommand("figure", "SVG drawing of a lattice pair: dots for L, circled dots for M");
    figure->add_option("--gram", gram, "Form coefficients a,b,c")->required();
    figure->add_option("--sub", sub, "Sublattice rows h11,h12,h21,h22")->required();
    figure->add_option("--ell", ell, "Prime index |det H|")->required();
    figure->add_option("--window", window, "Window radius in units of the shortest vector outside M")->check(CLI::PositiveNumber);
    figure->add_flag("--no-circles", no_circles, "Omit the two minimum circles");
    figure->add_option("--out", common.out_path, "Write output to PATH instead of stdout");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n\n";
        const CLI::App* sc = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        err << sc->help();
        return exit_usage;
    }

    try {
        std::ostringstream buffer;
        std::ostream& o = common.out_path.empty() ? out : buffer;
        const Format fmt = common.format();
        if (classgroup->parsed())
            cmd_classgroup(o, fmt, disc, compose, table);
        else if (temperaments->parsed())
            cmd_temperaments(o, common.as_json, ell, kind);
        else if (verify->parsed())
            cmd_verify(o, common.as_json, parse_pair(gram, sub, ell));
        else if (oracle->parsed())
            cmd_oracle(o, fmt, ell);
        else if (genus->parsed())
            cmd_genus(o, common.as_json, disc);
        else if (wellrounded->parsed())
            cmd_wellrounded(o, common.as_json, disc);
        else if (ells->parsed())
            cmd_ells_for_disc(o, err, common.as_json, disc, max);
        else if (congruences->parsed())
            cmd_congruences(o, common.as_json, disc);
        else if (scan->parsed())
            cmd_scan(o, common.as_json, max_ell, scan_csv);
        else if (figure->parsed()) {
            FigureSpec spec{parse_pair(gram, sub, ell), window, !no_circles, !no_circles};
            o << render_figure(spec);
        }
        if (!common.out_path.empty()) {
            std::ofstream f(common.out_path);
            if (!f) throw std::runtime_error("cannot write " + common.out_path);
            f << buffer.str();
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_domain;
    }
    return exit_ok;
}

}  // namespace tempered

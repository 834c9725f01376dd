#include "tempered/csv.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace tempered {

namespace {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

// Data lines with their 1-based line numbers; comments, blanks and the header are dropped.
std::vector<std::pair<std::size_t, std::vector<std::string>>> data_lines(std::istream& in, std::string_view header,
                                                                         std::size_t columns) {
    std::vector<std::pair<std::size_t, std::vector<std::string>>> out;
    std::string line;
    for (std::size_t n = 1; std::getline(in, line); ++n) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#' || line == header) continue;
        auto fields = split(line);
        if (fields.size() != columns)
            throw std::invalid_argument("csv line " + std::to_string(n) + ": expected " + std::to_string(columns) + " fields, got " +
                                        std::to_string(fields.size()));
        out.emplace_back(n, std::move(fields));
    }
    return out;
}

TemperamentKind parse_kind(const std::string& s) {
    for (auto k : {TemperamentKind::three_three, TemperamentKind::three_one, TemperamentKind::one_three})
        if (s == to_string(k)) return k;
    throw std::invalid_argument("unknown temperament kind '" + s + "'");
}

}  // namespace

void write_two_two_csv(std::ostream& out, std::span<const TwoTwoRecord> records) {
    out << csv_version_line << '\n' << two_two_columns << '\n';
    for (const auto& r : records)
        out << to_string(r.ell) << ',' << to_string(r.D) << ',' << to_string(r.classL.a) << ',' << to_string(r.classL.b) << ','
            << to_string(r.classM.a) << ',' << to_string(r.classM.b) << ',' << to_string(r.tau2.num()) << ',' << to_string(r.tau2.den())
            << '\n';
}

void write_temperament_csv(std::ostream& out, std::span<const TemperedRecord> records) {
    out << csv_version_line << '\n' << temperament_columns << '\n';
    for (const auto& r : records)
        out << to_string(r.kind) << ',' << to_string(r.ell) << ',' << to_string(r.tau2.num()) << ',' << to_string(r.tau2.den()) << ','
            << to_string(r.witness.x) << ',' << to_string(r.witness.y) << '\n';
}

std::vector<TwoTwoRecord> read_two_two_csv(std::istream& in) {
    std::vector<TwoTwoRecord> out;
    for (const auto& [n, f] : data_lines(in, two_two_columns, 8)) {
        try {
            TwoTwoRecord r;
            r.ell = parse_int(f[0]);
            r.D = parse_int(f[1]);
            const Int aL = parse_int(f[2]), bL = parse_int(f[3]), aM = parse_int(f[4]), bM = parse_int(f[5]);
            // Well-rounded forms (a, b, a) carry c = a.
            r.classL = {aL, bL, aL};
            r.classM = {aM, bM, aM};
            r.tau2 = Rational(parse_int(f[6]), parse_int(f[7]));
            out.push_back(r);
        } catch (const std::exception& e) {
            throw std::invalid_argument("csv line " + std::to_string(n) + ": " + e.what());
        }
    }
    return out;
}

std::vector<TemperedRecord> read_temperament_csv(std::istream& in) {
    std::vector<TemperedRecord> out;
    for (const auto& [n, f] : data_lines(in, temperament_columns, 6)) {
        try {
            TemperedRecord r;
            r.kind = parse_kind(f[0]);
            r.ell = parse_int(f[1]);
            r.tau2 = Rational(parse_int(f[2]), parse_int(f[3]));
            r.witness = {parse_int(f[4]), parse_int(f[5])};
            switch (r.kind) {
                case TemperamentKind::three_three:
                    r.s = 3, r.s_prime = 3;
                    r.sublattice = principal_ideal(r.witness);
                    break;
                case TemperamentKind::three_one:
                    r.s = 3, r.s_prime = 1;
                    r.sublattice = sublattice_containing(r.witness, r.ell);
                    break;
                case TemperamentKind::one_three:
                    r.s = 1, r.s_prime = 3;
                    r.sublattice = sublattice_containing(r.witness, r.ell);
                    break;
            }
            out.push_back(r);
        } catch (const std::exception& e) {
            throw std::invalid_argument("csv line " + std::to_string(n) + ": " + e.what());
        }
    }
    return out;
}

}  // namespace tempered

#ifndef TEMPERED_CSV_HPP
#define TEMPERED_CSV_HPP

#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "tempered/eisenstein.hpp"
#include "tempered/two_two.hpp"

namespace tempered {

/// First line of every CSV file written by this library.
inline constexpr std::string_view csv_version_line = "# tempered-forms v1";

inline constexpr std::string_view two_two_columns = "ell,D,aL,bL,aM,bM,tau2_num,tau2_den";
inline constexpr std::string_view temperament_columns = "kind,ell,tau2_num,tau2_den,wx,wy";

void write_two_two_csv(std::ostream& out, std::span<const TwoTwoRecord> records);
void write_temperament_csv(std::ostream& out, std::span<const TemperedRecord> records);

/// Inverse of the writers. Lines starting with '#' and the column header are
/// skipped; anything else malformed throws std::invalid_argument with the line number.
std::vector<TwoTwoRecord> read_two_two_csv(std::istream& in);
std::vector<TemperedRecord> read_temperament_csv(std::istream& in);

}  // namespace tempered

#endif

#pragma once

#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "rrbin/bin.hpp"
#include "rrbin/patterns.hpp"
#include "rrbin/scan.hpp"
#include "rrbin/statistics.hpp"

namespace rrbin {

/// printf-style %.{digits}g.
std::string format_real(double value, int digits);

/// JSON document with keys in the order n, score_kind, seed, stop,
/// min_split_expected, bins. Reals carry 17 significant digits.
std::string to_json(const Binning& binning);
Binning binning_from_json(std::string_view text);

/// CSV with header depth,n_bin,chi2.
void write_null_csv(std::ostream& out, const NullTable& null);
/// The CSV carries no settings, so the caller supplies them.
NullTable read_null_csv(std::istream& in, int n, const NullConfig& config);

std::string null_to_json(const NullTable& null);
NullTable null_from_json(std::string_view text);

/// Two-column CSV with header x,y.
void write_xy_csv(std::ostream& out, const Sample& sample);
Sample read_xy_csv(std::istream& in);

/// CSV with header name_a,name_b,n_bin,chi2,p_emp; reals with 10 digits.
void write_scan_csv(std::ostream& out, std::span<const ScanRecord> records);

} // namespace rrbin

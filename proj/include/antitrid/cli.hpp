#pragma once

#include <string>

#include "antitrid/matrix.hpp"

namespace antitrid::cli {

enum class Format { Json, Csv, Plain };

Format parse_format(const std::string& text);

/// Complex literal grammar: [+-]DEC[[+-]DEC]i with no spaces, e.g. "1+2i",
/// "-i", "2.5", "-0.5i". Throws DomainError on anything else.
Complex parse_complex(const std::string& text);

/// Canonical "re+imi" rendering with shortest round-trip digits;
/// parse_complex(format_complex(v)) == v bit for bit.
std::string format_complex(const Complex& v);

/// Human rendering: 6 significant digits, pure-real values without the
/// imaginary term.
std::string format_complex_human(const Complex& v);

/// Inclusive "lo..hi" range; a bare integer means lo == hi.
struct IntRange {
  int lo = 0;
  int hi = 0;
};

IntRange parse_range(const std::string& text);

/// The pinned matrix document: {"n": N, "entries": [[re, im], ...]},
/// row-major. Round-trips losslessly through matrix_from_json.
std::string matrix_to_json(const DenseMatrix& m);
DenseMatrix matrix_from_json(const std::string& text);

/// Full command dispatch; returns the process exit code
/// (0 success, 1 numerical failure or singular input, 2 usage error).
int run(int argc, const char* const* argv);

}  // namespace antitrid::cli

#pragma once

#include <iosfwd>
#include <string>

#include "polycert/certificate.hpp"

namespace polycert::cli {

enum ExitCode : int {
    kCertified = 0,
    kRefuted = 1,
    kInconclusive = 2,
    kInputError = 3,
};

/// Runs one subcommand. Writes exactly one JSON document to `out` unless
/// the input is rejected (exit 3); diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

struct Recheck {
    bool checkable = false;
    bool passed = false;
    std::string detail;
};

/// Re-derives the claim in a document from its inputs through the
/// independent expansion path.
Recheck recheck(const CertificateDocument& doc);

/// Writes to a sibling temp file and renames it over `path`.
void write_atomically(const std::string& path, const std::string& text);

}  // namespace polycert::cli

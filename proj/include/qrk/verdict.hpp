/// @file verdict.hpp
/// @brief Outcome record shared by all verification routines.
#ifndef QRK_VERDICT_HPP
#define QRK_VERDICT_HPP

#include <map>
#include <optional>
#include <string>

namespace qrk {

enum class Status { pass, fail, known_false_confirmed };

inline std::string status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::known_false_confirmed: return "known-false-confirmed";
    }
    return "fail";
}

/// Result of one verification run. A fail carries a witness; a pass carries
/// the verified range.
struct Verdict {
    std::string id;
    Status status = Status::pass;
    std::string mode;
    std::map<std::string, long> params;
    std::optional<std::string> first_failure;
    std::optional<std::string> witness;
    std::string verified_range;
    double elapsed_ms = 0.0;

    bool ok() const { return status != Status::fail; }

    void fail_at(const std::string& where, const std::string& what) {
        if (status == Status::fail) return;  // keep the first failure
        status = Status::fail;
        first_failure = where;
        witness = what;
    }
};

}  // namespace qrk

#endif

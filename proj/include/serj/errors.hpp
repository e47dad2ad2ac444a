#ifndef SERJ_ERRORS_HPP
#define SERJ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace serj {

/// Raised for malformed or invalid run configuration (bad field value,
/// missing topology, unknown sweep variable). Carries the field name.
class config_error : public std::runtime_error {
public:
    config_error(std::string field, const std::string& message)
        : std::runtime_error(field + ": " + message), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// The secrecy threshold cannot be met by any sane key length.
class secrecy_infeasible_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Residual jamming exceeds what the reliability target tolerates.
class reliability_infeasible_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reliability threshold below the secrecy threshold leaves no positive rate.
class rate_infeasible_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Source and destination are disconnected (only possible on sparsified graphs).
class no_path_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace serj

#endif

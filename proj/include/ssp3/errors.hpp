#ifndef SSP3_ERRORS_HPP
#define SSP3_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ssp {

// Errors that indicate corrupted or out-of-contract data in the pipeline.
struct InvalidNullPoint : std::runtime_error {
    explicit InvalidNullPoint(const std::string& m) : std::runtime_error(m) {}
};
struct SingularOrCorrupt : std::runtime_error {
    explicit SingularOrCorrupt(const std::string& m) : std::runtime_error(m) {}
};
struct WrongType : std::runtime_error {
    explicit WrongType(const std::string& m) : std::runtime_error(m) {}
};
struct MalformedNullPoint : std::runtime_error {
    explicit MalformedNullPoint(const std::string& m) : std::runtime_error(m) {}
};
struct DegenerateConfiguration : std::runtime_error {
    explicit DegenerateConfiguration(const std::string& m) : std::runtime_error(m) {}
};
struct NotSmooth : std::runtime_error {
    explicit NotSmooth(const std::string& m) : std::runtime_error(m) {}
};
struct GaveUp : std::runtime_error {
    explicit GaveUp(const std::string& m) : std::runtime_error(m) {}
};

} // namespace ssp

#endif

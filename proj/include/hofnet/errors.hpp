#ifndef HOFNET_ERRORS_HPP
#define HOFNET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hofnet {

// Thrown when a requested facet count exceeds the configured cap.
class SizeCapError : public std::runtime_error {
public:
    explicit SizeCapError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a fit or estimate cannot be produced (too few points, etc.).
class EstimationError : public std::runtime_error {
public:
    explicit EstimationError(const std::string& what) : std::runtime_error(what) {}
};

// File / parse failures.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hofnet

#endif

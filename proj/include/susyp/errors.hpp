#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace susyp {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Gamma evaluated at a non-positive integer.
class PoleError : public Error {
public:
    PoleError(const std::string& what, std::complex<double> z) : Error(what), z_(z) {}
    std::complex<double> where() const { return z_; }

private:
    std::complex<double> z_;
};

// Invalid lower parameter of 1F1.
class ParameterPoleError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class JetOrderError : public Error {
public:
    using Error::Error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class ZeroSeedError : public Error {
public:
    using Error::Error;
};

class DegenerateError : public Error {
public:
    DegenerateError(const std::string& what, double x) : Error(what), x_(x) {}
    double where() const { return x_; }

private:
    double x_;
};

// Wronskian (or other denominator) vanishes on the evaluation grid.
class NodeError : public Error {
public:
    NodeError(const std::string& what, std::vector<double> locations)
        : Error(what), locations_(std::move(locations)) {}
    const std::vector<double>& locations() const { return locations_; }

private:
    std::vector<double> locations_;
};

class UnimplementedError : public Error {
public:
    using Error::Error;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

}  // namespace susyp

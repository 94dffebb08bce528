#pragma once

#include <stdexcept>
#include <string>

namespace dugg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RingMismatch : public Error {
public:
    RingMismatch() : Error("operands live over different base rings") {}
};

class InfinitesimalNotInvertible : public Error {
public:
    InfinitesimalNotInvertible() : Error("infinitesimal dual element has no inverse") {}
};

class NotUnit : public Error {
public:
    explicit NotUnit(const std::string& what = "value is not a unit dual element") : Error(what) {}
};

class ShapeMismatch : public Error {
public:
    explicit ShapeMismatch(const std::string& what) : Error(what) {}
};

class SingularStandardPart : public Error {
public:
    SingularStandardPart() : Error("standard part of the matrix is singular") {}
};

class NotHermitian : public Error {
public:
    NotHermitian() : Error("matrix is not Hermitian within tolerance") {}
};

class SizeCapExceeded : public Error {
public:
    SizeCapExceeded(int n, int cap)
        : Error("size " + std::to_string(n) + " exceeds cap " + std::to_string(cap)) {}
};

class GraphError : public Error {
public:
    using Error::Error;
};

class NotUnitGain : public GraphError {
public:
    NotUnitGain(int u, int v)
        : GraphError("gain on edge {" + std::to_string(u) + "," + std::to_string(v) +
                     "} is not a unit dual element"),
          u_(u), v_(v) {}
    int u() const { return u_; }
    int v() const { return v_; }

private:
    int u_;
    int v_;
};

class DuplicateEdge : public GraphError {
public:
    DuplicateEdge(int u, int v)
        : GraphError("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}") {}
};

class SelfLoop : public GraphError {
public:
    explicit SelfLoop(int v) : GraphError("self-loop at vertex " + std::to_string(v)) {}
};

class NotAWalk : public GraphError {
public:
    explicit NotAWalk(const std::string& what = "consecutive vertices are not adjacent")
        : GraphError(what) {}
};

class NotACycle : public GraphError {
public:
    explicit NotACycle(const std::string& what = "vertex sequence is not a cycle of the graph")
        : GraphError(what) {}
};

class SyntaxError : public Error {
public:
    SyntaxError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

class BadRing : public Error {
public:
    explicit BadRing(const std::string& name) : Error("unknown ring '" + name + "'") {}
};

class BadParameter : public Error {
public:
    using Error::Error;
};

}  // namespace dugg

#pragma once

#include <stdexcept>
#include <string>

namespace symphase {

// Base class of everything thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class NonHermitianInput : public Error {
public:
    using Error::Error;
};

class InvalidQuantumNumbers : public Error {
public:
    using Error::Error;
};

class InvalidDegreeOrder : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class InvalidRank : public Error {
public:
    using Error::Error;
};

class BlochOutOfBall : public Error {
public:
    using Error::Error;
};

class OversizeEmbedding : public Error {
public:
    using Error::Error;
};

class TooFewQubits : public Error {
public:
    using Error::Error;
};

class InvalidCut : public Error {
public:
    using Error::Error;
};

class QuadratureTooCoarse : public Error {
public:
    using Error::Error;
};

class SolverStall : public Error {
public:
    using Error::Error;
};

// A positive classical decomposition coexisting with a fired entanglement
// witness would contradict the classicality/separability equivalence; seeing
// this error means the implementation is broken, not the state exotic.
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

class InvalidEnsemble : public Error {
public:
    using Error::Error;
};

class UndefinedMeanDirection : public Error {
public:
    using Error::Error;
};

// Malformed user input (CLI arguments, state files).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

}  // namespace symphase

#pragma once

#include <stdexcept>
#include <string>

namespace spheredeg {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An operation was called on a graph that fails validate_graph.
class InvalidGraphError : public Error {
public:
    explicit InvalidGraphError(const std::string& what) : Error(what) {}
};

/// Referenced edge id does not exist.
class NoSuchEdgeError : public Error {
public:
    explicit NoSuchEdgeError(const std::string& what) : Error(what) {}
};

/// Referenced face is not a face of the complex.
class FaceNotInComplexError : public Error {
public:
    explicit FaceNotInComplexError(const std::string& what) : Error(what) {}
};

/// Vertex labels collide where disjointness or freshness is required.
class LabelCollisionError : public Error {
public:
    explicit LabelCollisionError(const std::string& what) : Error(what) {}
};

/// Input data does not match the expected schema or preconditions.
class SchemaError : public Error {
public:
    explicit SchemaError(const std::string& what) : Error(what) {}
};

/// A configured resource cap would be exceeded.
class ResourceLimitError : public Error {
public:
    explicit ResourceLimitError(const std::string& what) : Error(what) {}
};

/// The face passed to low_link is not a pillar face.
class NotAPillarError : public Error {
public:
    explicit NotAPillarError(const std::string& what) : Error(what) {}
};

/// No disk filling was found within the configured search bounds.
class FillError : public Error {
public:
    explicit FillError(const std::string& what) : Error(what) {}
};

/// File could not be read or written.
class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace spheredeg

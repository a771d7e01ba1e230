#ifndef HOLES3D_ERRORS_HPP
#define HOLES3D_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace holes3d {

// Malformed caller input: empty systems, size mismatches, unparsable rationals,
// parameters outside their documented domain.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A build step failed its own validation: non-separable front/back point sets,
// a degenerate hull where a solid was required, or an exhausted epsilon search.
class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A requested computation exceeds a configured budget (e.g. voxel cell count).
// The message names the budget and suggests a workable parameter.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace holes3d

#endif

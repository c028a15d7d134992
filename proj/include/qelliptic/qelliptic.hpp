#pragma once

// Umbrella header: exact q-series arithmetic, Eisenstein series, the
// squared-cotangent identity workspace, theta lattice sums, 2F1, the nome
// inversion theorems, the Fourier-series elliptic functions, and the
// meromorphic continuation of f(theta).

#include "qelliptic/rational.hpp"
#include "qelliptic/qseries.hpp"
#include "qelliptic/eisenstein.hpp"
#include "qelliptic/trig_identity.hpp"
#include "qelliptic/theta.hpp"
#include "qelliptic/hyper2f1.hpp"
#include "qelliptic/report.hpp"
#include "qelliptic/inversion.hpp"
#include "qelliptic/jacobi_fourier.hpp"
#include "qelliptic/elliptic_f.hpp"
#include "qelliptic/suites.hpp"

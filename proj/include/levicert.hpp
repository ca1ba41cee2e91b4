#pragma once

// Umbrella header.

#include "levicert/core/hermitian_form.hpp"
#include "levicert/core/monomial.hpp"
#include "levicert/errors.hpp"
#include "levicert/finite_type.hpp"
#include "levicert/rational.hpp"
#include "levicert/weights/cutoff.hpp"
#include "levicert/weights/hinge.hpp"
#include "levicert/weights/weight_family.hpp"
#include "levicert/certify/certificate.hpp"
#include "levicert/certify/checks.hpp"
#include "levicert/certify/eigen.hpp"
#include "levicert/certify/fd_hessian.hpp"
#include "levicert/certify/parallel.hpp"
#include "levicert/certify/sample_plan.hpp"
#include "levicert/io/certificate_json.hpp"
#include "levicert/io/format.hpp"
#include "levicert/io/problem.hpp"
#include "levicert/io/scan.hpp"

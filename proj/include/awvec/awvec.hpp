#pragma once

#include "awvec/errors.hpp"
#include "awvec/scalar.hpp"
#include "awvec/real.hpp"
#include "awvec/qseries.hpp"
#include "awvec/laurent.hpp"
#include "awvec/orthobasis.hpp"
#include "awvec/vector_form.hpp"
#include "awvec/mutation.hpp"
#include "awvec/convergence.hpp"
#include "awvec/askey_wilson.hpp"
#include "awvec/daha.hpp"
#include "awvec/nonsym_aw.hpp"
#include "awvec/little_q_jacobi.hpp"
#include "awvec/jacobi.hpp"
#include "awvec/bessel.hpp"
#include "awvec/report.hpp"
#include "awvec/suites.hpp"

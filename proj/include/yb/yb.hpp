#ifndef YB_YB_HPP
#define YB_YB_HPP

#include <yb/chain.hpp>
#include <yb/check_report.hpp>
#include <yb/checks.hpp>
#include <yb/error.hpp>
#include <yb/maps/adler.hpp>
#include <yb/maps/controls.hpp>
#include <yb/maps/crystal.hpp>
#include <yb/maps/soliton.hpp>
#include <yb/matrix.hpp>
#include <yb/projective.hpp>
#include <yb/scalar.hpp>
#include <yb/spectral.hpp>

#endif  // YB_YB_HPP

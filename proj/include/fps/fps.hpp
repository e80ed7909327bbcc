#ifndef FPS_FPS_HPP
#define FPS_FPS_HPP

#include "fps/errors.hpp"
#include "fps/generators.hpp"
#include "fps/json_io.hpp"
#include "fps/kaluza.hpp"
#include "fps/oracle.hpp"
#include "fps/power_mean.hpp"
#include "fps/random_gen.hpp"
#include "fps/rational.hpp"
#include "fps/reproduce.hpp"
#include "fps/scan.hpp"
#include "fps/sequence_properties.hpp"
#include "fps/series.hpp"
#include "fps/verdict.hpp"

#endif

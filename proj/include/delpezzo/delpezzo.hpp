// delpezzo.hpp -- umbrella header
#ifndef DELPEZZO_DELPEZZO_HPP
#define DELPEZZO_DELPEZZO_HPP

#include "delpezzo/rational.hpp"
#include "delpezzo/surface.hpp"
#include "delpezzo/geometry.hpp"
#include "delpezzo/graph.hpp"
#include "delpezzo/elimination.hpp"
#include "delpezzo/triplet.hpp"
#include "delpezzo/catalog.hpp"
#include "delpezzo/classify.hpp"
#include "delpezzo/document.hpp"

#endif

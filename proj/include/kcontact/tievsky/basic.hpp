#pragma once

#include "kcontact/cohomology/forms.hpp"
#include "kcontact/contact/contact.hpp"

namespace kc {

// Forms beta with i_xi beta = 0 and i_xi d beta = 0, degree by degree, with
// the differential restricted to them. Throws not-closed-under-d if d leaves
// the subcomplex (impossible for a genuine Reeb vector; checked anyway).
FormComplex basic_complex(const LieAlgebra& L, const ContactData& cd);

inline FormCohomology basic_cohomology(const LieAlgebra& L, const ContactData& cd) {
  return FormCohomology(L, basic_complex(L, cd));
}

}  // namespace kc


from .capax_util import Capax

__capax_obj = Capax()

space_capacity = __capax_obj.get_capacity
space_normal_form = __capax_obj.get_normal_form
space_dominated_types = __capax_obj.get_dominated_types
space_homology = __capax_obj.get_homology
space_homotopy = __capax_obj.get_homotopy
space_pseudoprojective_form = __capax_obj.get_pseudoprojective_form
group_canonical = __capax_obj.get_group
group_summands = __capax_obj.get_summands
group_oracle_classes = __capax_obj.get_oracle_classes
group_idempotents = __capax_obj.get_idempotent_report
verify_summand_counts = __capax_obj.verify_up_to


__all__ = ['space_capacity', 'space_normal_form', 'space_dominated_types', 'space_homology', 'space_homotopy',
           'space_pseudoprojective_form', 'group_canonical', 'group_summands', 'group_oracle_classes',
           'group_idempotents', 'verify_summand_counts']

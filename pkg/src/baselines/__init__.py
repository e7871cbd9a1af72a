"""
Baselines Module
"""
from src.baselines.mat import Mat2Frame, mat2_frame
from src.baselines.partition import IndexPartition, dump_partition, partition_slots
from src.baselines.timeshare import TimeshareFrame, timeshare_frame
from src.baselines.zf import TdmaFrame, ZfFrame, served_users, tdma_frame, zf_frame

__all__ = [
    'IndexPartition',
    'Mat2Frame',
    'TdmaFrame',
    'TimeshareFrame',
    'ZfFrame',
    'dump_partition',
    'mat2_frame',
    'partition_slots',
    'served_users',
    'tdma_frame',
    'timeshare_frame',
    'zf_frame',
]

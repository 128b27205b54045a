"""
多跳能量模型测试
"""

"""
Commands Package - 命令插件目录

【注意】
此目录下的每个子目录代表一个命令组
每个命令插件必须：
1. 继承自 BaseCommand
2. 定义 NAME / HELP 类属性
3. 严格遵循构造函数 def __init__(self)
4. 拆分为参数界面模块（*_command.py）和编排模块（*_logic.py）

【红线规则】
- 命令插件不得 import 其他命令插件
- 精确计算只能通过 core 完成
"""

"""nuset: 有限ν-集合の計算カーネル

インデックス形式の反復パラメトリシティを有限集合上で扱う。

コンポーネント:
    - shared: インデックス演算、値の木構造、正準キー
    - symbolic: 記号的な型の展開・正規化・シグネチャ表示
    - concrete: 有限モデルの列挙・制限・整合性検査
    - staged: 段階的ビルダー（レベルごとの構築順序）
    - fibred: インデックス形式とファイバー形式の相互変換
    - generator: シード付きランダムインスタンス生成
"""

package redis.clients.jedis;

public class BinaryJedisCluster {
    protected JedisClusterConnectionHandler connectionHandler;
    protected int maxRedirections;

    public String save(String key) {
        return new JedisClusterCommand<String>(connectionHandler, maxRedirections).run(key);
    }

    public String spop(String key) {
        return new JedisClusterCommand<String>(connectionHandler, maxRedirections).run(key);
    }
}

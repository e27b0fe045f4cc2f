package redis.clients.jedis;

public class BinaryJedisCluster {
    protected JedisClusterConnectionHandler connectionHandler;
    protected int timeout;
    protected int maxRedirections;

    public String save(String key) {
        return new JedisClusterCommand<String>(connectionHandler, timeout, maxRedirections).run(key);
    }
}
